#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nullcolor/algebra.hpp"
#include "nullcolor/graphs.hpp"
#include "nullcolor/kernels.hpp"
#include "nullcolor/polys.hpp"

namespace nullcolor::coloring {

using algebra::Field;
using algebra::FieldElement;
using graphs::Graph;
using kernels::Backend;
using polys::ExponentVector;
using polys::FactorList;

inline constexpr std::uint64_t kDefaultGridBudget = 100'000'000;
inline constexpr std::uint64_t kDefaultLabelingBudget = 10'000'000;

/// Per-vertex lists of distinct field elements.
class ListAssignment {
 public:
  ListAssignment() = default;
  explicit ListAssignment(std::vector<std::vector<FieldElement>> lists) : lists_(std::move(lists)) {}
  /// Every vertex gets the whole (finite) field.
  static ListAssignment full(const Field& field, int n);

  std::size_t size() const noexcept { return lists_.size(); }
  const std::vector<FieldElement>& operator[](std::size_t i) const { return lists_.at(i); }
  const std::vector<std::vector<FieldElement>>& lists() const noexcept { return lists_; }
  std::vector<std::size_t> sizes() const;
  /// Throws MalformedInput for empty lists, repeats, or a count other than n;
  /// FieldMismatch for foreign elements.
  void validate(const Field& field, int n) const;

 private:
  std::vector<std::vector<FieldElement>> lists_;
};

/// Z_{m_1} x ... x Z_{m_r}; elements are indexed in mixed radix with the first
/// factor most significant.
class AbelianGroup {
 public:
  /// Throws MalformedInput unless every order is at least 2.
  explicit AbelianGroup(std::vector<std::uint32_t> orders);
  static AbelianGroup cyclic(std::uint32_t m) { return AbelianGroup({m}); }

  const std::vector<std::uint32_t>& orders() const noexcept { return orders_; }
  std::uint64_t order() const noexcept { return order_; }
  std::vector<std::uint32_t> residues(std::uint64_t index) const;
  std::uint64_t index(const std::vector<std::uint32_t>& residues) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;

 private:
  std::vector<std::uint32_t> orders_;
  std::uint64_t order_ = 1;
};

/// Lists of group element indices.
using GroupLists = std::vector<std::vector<std::uint64_t>>;
GroupLists full_group_lists(const AbelianGroup& group, int n);

// ---------------------------------------------------------------------------

struct CnSolution {
  std::vector<FieldElement> point;
  /// The top-degree monomial that certified existence.
  ExponentVector witness;
};

/// Point of the list grid where every factor is nonzero. Uses `witness` when
/// given, otherwise the first top-degree monomial with deg_i <= |A_i| - 1.
/// Throws ListTooSmall, NoWitnessMonomial, BudgetExceeded.
CnSolution cn_solve(const FactorList& f, const ListAssignment& lists,
                    const std::optional<ExponentVector>& witness = std::nullopt,
                    std::uint64_t budget = kDefaultGridBudget);

/// Grid problem whose allowed points are those where every factor is nonzero.
kernels::GridProblem factor_grid(const FactorList& f, const ListAssignment& lists);

/// Number of grid points with a*f(u) + b*f(v) + label != 0 on every edge.
/// Throws BudgetExceeded when the grid is larger than `budget`.
std::uint64_t count_colorings(const Field& field, const Graph& g, const polys::Decoration& dec,
                              const polys::EdgeLabeling& lab, const ListAssignment& lists,
                              std::uint64_t budget = kDefaultGridBudget, Backend backend = Backend::Parallel);

/// Number of colorings with c(head) - c(tail) != label on every edge.
std::uint64_t count_group_colorings(const Graph& g, const polys::Orientation& orient, const AbelianGroup& group,
                                    const std::vector<std::uint64_t>& labels, const GroupLists& lists,
                                    std::uint64_t budget = kDefaultGridBudget, Backend backend = Backend::Parallel);

struct AdversaryResult {
  /// Group element index per edge (canonical edge order).
  std::vector<std::uint64_t> labeling;
  std::uint64_t min_count = 0;
  std::uint64_t labelings_examined = 0;
};

/// Exhaustive minimum of the coloring count over all |group|^m labelings;
/// ties go to the first labeling in mixed-radix order (edge 0 least significant).
/// Throws BudgetExceeded.
AdversaryResult adversarial_min(const Graph& g, const polys::Orientation& orient, const AbelianGroup& group,
                                const GroupLists& lists, std::uint64_t labeling_budget = kDefaultLabelingBudget,
                                std::uint64_t grid_budget = kDefaultGridBudget, Backend backend = Backend::Parallel);

// ---------------------------------------------------------------------------

struct CyclicEmbedding {
  std::uint64_t m = 0;
  std::uint32_t p = 0;
  std::uint64_t totient = 0;
  /// Extension degree actually used: ord_m(p) by default, or the totient.
  unsigned degree = 0;
  Field field = Field::rationals();
  FieldElement generator;
};

/// Z_m inside the multiplicative group of F_{p^k} for the smallest prime p not
/// dividing m. Throws FieldTooLarge, MalformedInput (m < 2).
CyclicEmbedding cyclic_embed(std::uint64_t m, bool use_totient = false);

/// Factor x_head - g^label * x_tail per edge. Throws LabelOutOfRange.
FactorList multiplicative_instance(const Graph& g, const polys::Orientation& orient,
                                   const std::vector<std::uint64_t>& labels, const CyclicEmbedding& emb);

/// Residue lists mapped to subgroup lists r -> g^r.
ListAssignment subgroup_lists(const CyclicEmbedding& emb, const GroupLists& residues);
/// Discrete log base g of a subgroup element. Throws MalformedInput outside <g>.
std::uint64_t subgroup_log(const CyclicEmbedding& emb, const FieldElement& x);

/// Field form of c(head) - c(tail) != label: (a, b, c) = (-1, 1, -label) for
/// edge tail -> head, written on the canonical edge.
FactorList additive_instance(const Field& field, const Graph& g, const polys::Orientation& orient,
                             const polys::EdgeLabeling& labels);

}  // namespace nullcolor::coloring
