#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "nullcolor/graphs.hpp"
#include "nullcolor/polys.hpp"

namespace nullcolor::certify {

using algebra::Field;
using algebra::FieldElement;
using graphs::Edge;
using graphs::Graph;
using graphs::NearTriangulation;
using polys::Decoration;
using polys::ExponentVector;

enum class StepKind {
  Base,
  Chord,
  BoundaryTriangle,
  SpecialMonomial,
  NoSpecial,
  TriangleDeletion,
  V8,
  CliqueGlue,
  EdgeDrop,
};

std::string_view step_name(StepKind kind) noexcept;

struct TraceStep {
  StepKind kind;
  std::vector<int> vertices;
};

/// A non-vanishing monomial of a specific polynomial, with its exact coefficient
/// and the derivation that produced it. Every certificate returned by this
/// module has had its coefficient recomputed by `polys::coeff_of_monomial`.
struct MonomialCertificate {
  ExponentVector monomial;
  FieldElement coefficient;
  std::vector<TraceStep> trace;
};

/// Throws InvariantViolation unless the certificate's coefficient is nonzero and
/// equals the coefficient recomputed from `target`.
void verify_certificate(const polys::FactorList& target, const MonomialCertificate& cert);

/// Factors of D_{G - removed} under `dec`.
polys::FactorList factors_without(const Field& field, const Graph& g, const Decoration& dec,
                                  const std::vector<Edge>& removed);

/// Nice monomial of D_{G - xy} for the boundary edge xy: degree 0 at x and y,
/// at most 2 on the boundary, at most 4 inside. Follows the inductive
/// construction (chord split, boundary triangle, special / no special monomial).
/// Throws NotBoundaryEdge, ZeroDecoration, MissingEdge, BudgetExceeded.
MonomialCertificate nice_monomial(const Field& field, const NearTriangulation& nt, int x, int y,
                                  const Decoration& dec, std::size_t budget = polys::kDefaultMonomialBudget);

/// A triangulation given in its own numbering together with the global index
/// of each of its vertices.
struct SubTriangulation {
  NearTriangulation tri;
  std::vector<int> to_global;
};

/// Split of a triangulation along a separating triangle into the two sides,
/// each containing the triangle. Throws MissingSplit when the triangle does not
/// separate the graph into exactly two pieces that are triangulations.
std::pair<SubTriangulation, SubTriangulation> split_at_triangle(const NearTriangulation& tri,
                                                                const std::array<int, 3>& triangle);

/// Monomial of D_{G - E(T)} with degree 0 on T and at most 4 elsewhere.
/// Non-facial triangles are split automatically unless `split` is given.
/// Throws NotATriangle, MissingSplit.
MonomialCertificate triangle_deleted_monomial(const Field& field, const NearTriangulation& tri,
                                              const std::array<int, 3>& triangle, const Decoration& dec,
                                              const std::optional<std::pair<SubTriangulation, SubTriangulation>>& split =
                                                  std::nullopt,
                                              std::size_t budget = polys::kDefaultMonomialBudget);

/// Monomial of D_{V8 - e} with degree 0 at both ends of e and at most 3 elsewhere,
/// taken from the first acyclic orientation found. Throws NotV8Edge.
MonomialCertificate v8_rooted_monomial(const Field& field, Edge e, const Decoration& dec);

/// Monomial of D_{V8} with degree 0 at `root` (used for single-vertex glues).
MonomialCertificate v8_vertex_rooted_monomial(const Field& field, int root, const Decoration& dec);

/// Certificate for D_G of the composed graph with every degree at most 4.
/// `dec` must cover the composed graph; dropped clique edges that it does not
/// cover are decorated with (1, -1) for the intermediate steps.
/// Throws GlueMismatch and whatever the parts throw.
MonomialCertificate clique_sum_monomial(const Field& field, const graphs::CliqueSumTree& tree, const Decoration& dec,
                                        std::size_t budget = polys::kDefaultMonomialBudget);

struct MatchingCertificate {
  std::vector<Edge> matching;
  MonomialCertificate certificate;
};

inline constexpr int kMatchingSearchMaxOrder = 10;

/// Smallest (then lexicographically first) matching S with an_number(D_{G-S}) <= 3.
/// Throws PreconditionViolated above `max_order` vertices and SearchExhausted
/// when no matching works.
MatchingCertificate find_matching_at3(const Field& field, const Graph& g, const Decoration& dec,
                                      int max_order = kMatchingSearchMaxOrder,
                                      std::size_t budget = polys::kDefaultMonomialBudget);

}  // namespace nullcolor::certify
