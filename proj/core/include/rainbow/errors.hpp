#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rainbow {

enum class ErrorKind {
  LoopArc,
  DuplicateArc,
  VertexOutOfRange,
  NotAPath,
  TooManyColors,
  Unreachable,
  NotStronglyConnected,
  NotOriented,
  ArcInMultipleCycles,
  ArcInNoCycle,
  InvalidFamilyParams,
  NoSchemeForFamily,
  NotATournament,
  PreconditionViolated,
  BudgetExceeded,
  OutOfRange,
  ParseError,
  InvalidColoring,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  // Offending arc or vertex, when the error names one.
  int u = -1;
  int v = -1;

 private:
  ErrorKind kind_;
};

class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& what, std::uint64_t nodes)
      : Error(ErrorKind::BudgetExceeded, what), nodes(nodes) {}

  std::uint64_t nodes = 0;
};

[[noreturn]] void throw_arc_error(ErrorKind kind, int u, int v,
                                  const std::string& what);

}  // namespace rainbow
