#include "ihara/error.hpp"

namespace ihara {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::InvalidDistribution: return "InvalidDistribution";
    case ErrorKind::Io: return "Io";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::IncompletePrimeList: return "IncompletePrimeList";
    case ErrorKind::InsufficientTraces: return "InsufficientTraces";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorKind::InnerConstantNonzero: return "InnerConstantNonzero";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::InversePairMismatch: return "InversePairMismatch";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedLine:
    case ErrorKind::LoopEdge:
    case ErrorKind::EmptyGraph:
    case ErrorKind::VertexOutOfRange:
    case ErrorKind::InvalidDistribution:
    case ErrorKind::Io:
      return true;
    default:
      return false;
  }
}

}  // namespace ihara
