#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/digraph.hpp"

namespace rainbow {

struct SolveBudget {
  // Cap on the number of colored elements; 0 means the kind default
  // (16 for arc/total kinds, 12 for vertex kinds). The solver refuses
  // larger instances instead of running unbounded.
  int max_elements = 0;
  std::uint64_t max_nodes = 4'000'000'000ULL;
  double max_seconds = 600.0;

  static SolveBudget with_elements(int elements) {
    SolveBudget b;
    b.max_elements = elements;
    return b;
  }
};

int default_element_cap(ParamKind kind);

struct SolveStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

struct SolveResult {
  ParamKind kind{};
  int value = 0;
  // check_connected(d, witness, kind) holds and the witness uses exactly
  // `value` colors. Exception: when value is 0 (vertex kinds on digraphs of
  // diameter <= 1, where no path has an internal vertex) the witness carries
  // one color, since every vertex must still be assigned something.
  Coloring witness;
  // True iff the value-1 color space was exhausted without a solution.
  bool searched_below = false;
  SolveStats stats;
};

// 2*diam-1 (at least 1) for TRC/STRC, diam for RC/SRC, diam-1 (at least 0)
// for RVC/SRVC.
int lower_bound(const Digraph& d, ParamKind kind);

// Optimal value of the parameter by iterative deepening over the color
// budget. Colorings are enumerated over the kind's elements (vertices by id,
// then arcs lexicographically) as restricted-growth strings; a partial
// assignment is abandoned as soon as some ordered pair can no longer obtain
// a rainbow path/geodesic even with all uncolored elements chosen freely.
SolveResult exact(const Digraph& d, ParamKind kind, SolveBudget budget = {});

// Undirected parameter of a connected graph, computed over its biorientation
// with each symmetric arc pair constrained to one shared color.
SolveResult exact_undirected(int n, const std::vector<Arc>& edges,
                             ParamKind kind, SolveBudget budget = {});

// Single level of the search: a witness using at most k colors, or nullopt
// when the k-color space is exhausted.
std::optional<Coloring> feasible_coloring(const Digraph& d, ParamKind kind,
                                          int k, SolveBudget budget = {});

}  // namespace rainbow
