#include "fkdiv/error.hpp"

namespace fkdiv {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::NotComparability: return "NotComparability";
    case ErrorCode::NotCocomparability: return "NotCocomparability";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::OrderingNotBiconvex: return "OrderingNotBiconvex";
    case ErrorCode::StructureMismatch: return "StructureMismatch";
    case ErrorCode::NotChordal: return "NotChordal";
    case ErrorCode::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorCode::MissingVertex: return "MissingVertex";
    case ErrorCode::MissingEdge: return "MissingEdge";
    case ErrorCode::DisconnectedOccurrence: return "DisconnectedOccurrence";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ProfileSpaceOverflow: return "ProfileSpaceOverflow";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidOrdering: return "InvalidOrdering";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::NoApplicableAlgorithm: return "NoApplicableAlgorithm";
  }
  return "Unknown";
}

}  // namespace fkdiv
