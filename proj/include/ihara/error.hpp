#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ihara {

enum class ErrorKind {
  // Input errors.
  MalformedLine,
  LoopEdge,
  EmptyGraph,
  VertexOutOfRange,
  InvalidDistribution,
  Io,
  // Domain rejections.
  NotAdmissible,
  OutOfDomain,
  InvalidParams,
  SingularMatrix,
  NoConvergence,
  BudgetExceeded,
  IncompletePrimeList,
  InsufficientTraces,
  // Series engine.
  OrderMismatch,
  NonzeroConstantTerm,
  InnerConstantNonzero,
  NotInvertible,
  InversePairMismatch,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// True for errors caused by malformed user input (files, flags) rather than
/// a mathematically invalid request.
bool is_input_error(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ihara
