#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nullcolor {

enum class ErrorCode {
  // algebra
  NotPrime,
  ReducibleModulus,
  ZeroElement,
  NoSuchOrder,
  InfiniteField,
  FieldMismatch,
  FieldTooLarge,
  // graphs
  MalformedInput,
  LoopEdge,
  DuplicateEdge,
  UnknownVertex,
  InvalidEmbedding,
  NotTwoConnected,
  NonTriangularInnerFace,
  OuterFaceNotCycle,
  NotAClique,
  MapTooLarge,
  DropOutsideClique,
  // polys
  ZeroDecoration,
  MissingEdge,
  BudgetExceeded,
  ZeroPolynomial,
  // certify
  NotBoundaryEdge,
  NotATriangle,
  MissingSplit,
  NotV8Edge,
  GlueMismatch,
  SearchExhausted,
  // coloring
  NoWitnessMonomial,
  ListTooSmall,
  LabelOutOfRange,
  // bounds
  Infeasible,
  PreconditionViolated,
  PositiveRequired,
  DegenerateMax,
  // a theorem-level guarantee failed; always a bug
  InvariantViolation,
};

std::string_view error_name(ErrorCode code) noexcept;

/// True for codes that signal a broken mathematical guarantee rather than bad input.
bool is_guarantee_violation(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nullcolor
