#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rainbow {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // names the first failing instance, when any
  double seconds = 0.0;
};

struct SuiteOptions {
  std::uint64_t seed = 20240817;
  // Overrides the element cap used for the solver-heavy criteria; 0 keeps
  // the per-criterion defaults.
  int max_elements = 0;
  // Caps the exhaustive-enumeration order (criterion on all strongly
  // connected digraphs); the default 4 is the full check.
  int max_n = 4;
  // Run only this criterion id when nonzero.
  int only = 0;
};

// The theorem-check suite: one result per criterion, in fixed order.
// Deterministic under a fixed seed.
std::vector<CriterionResult> run_check_suite(const SuiteOptions& options,
                                             std::ostream& log);

}  // namespace rainbow
