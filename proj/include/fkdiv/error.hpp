#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fkdiv {

enum class ErrorCode {
  InvalidArgument,
  VertexOutOfRange,
  NotComparability,
  NotCocomparability,
  CycleDetected,
  NotConnected,
  OrderingNotBiconvex,
  StructureMismatch,
  NotChordal,
  InvalidDecomposition,
  MissingVertex,
  MissingEdge,
  DisconnectedOccurrence,
  NotATree,
  EmptySet,
  BudgetExceeded,
  ProfileSpaceOverflow,
  SyntaxError,
  DimensionMismatch,
  InvalidOrdering,
  UnknownFamily,
  ParameterOutOfRange,
  NoApplicableAlgorithm,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline bool is_decomposition_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidDecomposition:
    case ErrorCode::MissingVertex:
    case ErrorCode::MissingEdge:
    case ErrorCode::DisconnectedOccurrence:
    case ErrorCode::NotATree:
      return true;
    default:
      return false;
  }
}

}  // namespace fkdiv
