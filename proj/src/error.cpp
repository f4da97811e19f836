#include "nullcolor/error.hpp"

namespace nullcolor {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NoSuchOrder: return "NoSuchOrder";
    case ErrorCode::InfiniteField: return "InfiniteField";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::InvalidEmbedding: return "InvalidEmbedding";
    case ErrorCode::NotTwoConnected: return "NotTwoConnected";
    case ErrorCode::NonTriangularInnerFace: return "NonTriangularInnerFace";
    case ErrorCode::OuterFaceNotCycle: return "OuterFaceNotCycle";
    case ErrorCode::NotAClique: return "NotAClique";
    case ErrorCode::MapTooLarge: return "MapTooLarge";
    case ErrorCode::DropOutsideClique: return "DropOutsideClique";
    case ErrorCode::ZeroDecoration: return "ZeroDecoration";
    case ErrorCode::MissingEdge: return "MissingEdge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotBoundaryEdge: return "NotBoundaryEdge";
    case ErrorCode::NotATriangle: return "NotATriangle";
    case ErrorCode::MissingSplit: return "MissingSplit";
    case ErrorCode::NotV8Edge: return "NotV8Edge";
    case ErrorCode::GlueMismatch: return "GlueMismatch";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::NoWitnessMonomial: return "NoWitnessMonomial";
    case ErrorCode::ListTooSmall: return "ListTooSmall";
    case ErrorCode::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::PositiveRequired: return "PositiveRequired";
    case ErrorCode::DegenerateMax: return "DegenerateMax";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

bool is_guarantee_violation(ErrorCode code) noexcept {
  return code == ErrorCode::InvariantViolation || code == ErrorCode::SearchExhausted;
}

}  // namespace nullcolor
