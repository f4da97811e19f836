#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "nullcolor/algebra.hpp"
#include "nullcolor/graphs.hpp"

namespace nullcolor::polys {

using algebra::Field;
using algebra::FieldElement;
using graphs::Edge;
using graphs::Graph;

inline constexpr std::size_t kDefaultMonomialBudget = 10'000'000;

/// Per-edge pair (a, b): the factor of edge u < v is a*x_u + b*x_v.
struct DecorationEntry {
  FieldElement a;
  FieldElement b;
};

class Decoration {
 public:
  /// a = 1, b = -1 on every edge, i.e. the plain graph polynomial.
  static Decoration standard(const Graph& g, const Field& field);

  void set(Edge e, FieldElement a, FieldElement b) { entries_[e] = DecorationEntry{std::move(a), std::move(b)}; }
  bool contains(Edge e) const { return entries_.count(e) > 0; }
  /// Throws MissingEdge.
  const DecorationEntry& at(Edge e) const;
  /// Coefficient of x_w in the factor of e (w must be an endpoint).
  const FieldElement& coefficient_of(Edge e, int w) const;
  const std::map<Edge, DecorationEntry>& entries() const noexcept { return entries_; }

 private:
  std::map<Edge, DecorationEntry> entries_;
};

class EdgeLabeling {
 public:
  static EdgeLabeling zeros(const Graph& g, const Field& field);

  void set(Edge e, FieldElement label) { labels_[e] = std::move(label); }
  bool contains(Edge e) const { return labels_.count(e) > 0; }
  const FieldElement& at(Edge e) const;
  const std::map<Edge, FieldElement>& entries() const noexcept { return labels_; }

 private:
  std::map<Edge, FieldElement> labels_;
};

/// a*x_u + b*x_v + c. Either coefficient may be zero for general factor lists.
struct AffineFactor {
  int u = 0;
  FieldElement a;
  int v = 0;
  FieldElement b;
  FieldElement c;
};

/// Implicit product of affine factors over a fixed field.
class FactorList {
 public:
  FactorList(Field field, int num_vars) : field_(std::move(field)), num_vars_(num_vars) {}

  void add(AffineFactor f);

  const Field& field() const noexcept { return field_; }
  int num_vars() const noexcept { return num_vars_; }
  const std::vector<AffineFactor>& factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }
  bool homogeneous() const;
  /// Number of factors in which each variable has a nonzero coefficient.
  std::vector<unsigned> variable_counts() const;
  /// The homogeneous component of top degree, still in product form: constants
  /// are dropped from factors with a linear part; constant factors fold into a
  /// scalar carried by an extra variable-free factor. Throws ZeroPolynomial.
  FactorList top_degree_part() const;
  /// Value at a point (one element per variable).
  FieldElement evaluate(const std::vector<FieldElement>& point) const;

 private:
  Field field_;
  int num_vars_;
  std::vector<AffineFactor> factors_;
};

/// Degrees of each variable in a monomial.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : exps_(n, 0) {}
  explicit ExponentVector(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  std::size_t size() const noexcept { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<unsigned>& values() const noexcept { return exps_; }
  unsigned total_degree() const noexcept;
  unsigned max_degree() const noexcept;

  auto operator<=>(const ExponentVector&) const = default;

 private:
  std::vector<unsigned> exps_;
};

ExponentVector operator*(const ExponentVector& a, const ExponentVector& b);

/// Explicit polynomial: nonzero coefficients keyed by exponent vector,
/// iterated in lexicographic order.
class SparsePoly {
 public:
  SparsePoly(Field field, int num_vars) : field_(std::move(field)), num_vars_(num_vars) {}

  const Field& field() const noexcept { return field_; }
  int num_vars() const noexcept { return num_vars_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  /// Zero when absent.
  FieldElement coefficient(const ExponentVector& m) const;
  /// Adds to the stored coefficient, erasing it if it cancels.
  void accumulate(const ExponentVector& m, const FieldElement& c);
  const std::map<ExponentVector, FieldElement>& terms() const noexcept { return terms_; }
  /// Terms of exactly this total degree.
  SparsePoly homogeneous_part(unsigned degree) const;
  FieldElement evaluate(const std::vector<FieldElement>& point) const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.field_ == b.field_ && a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

 private:
  Field field_;
  int num_vars_;
  std::map<ExponentVector, FieldElement> terms_;
};

/// One direction bit per canonical edge: true means the edge points at its larger endpoint.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::vector<bool> toward_larger) : toward_larger_(std::move(toward_larger)) {}
  /// Every edge u < v directed u -> v.
  static Orientation canonical(const Graph& g) { return Orientation(std::vector<bool>(g.size(), true)); }
  /// Bit i taken from bit i of `code`.
  static Orientation from_code(const Graph& g, std::uint64_t code);

  bool toward_larger(std::size_t edge) const { return toward_larger_.at(edge); }
  int head(const Graph& g, std::size_t edge) const;
  int tail(const Graph& g, std::size_t edge) const;
  std::vector<unsigned> in_degrees(const Graph& g) const;
  bool is_acyclic(const Graph& g) const;

 private:
  std::vector<bool> toward_larger_;
};

// ---------------------------------------------------------------------------

/// One factor per edge in canonical order: a*x_u + b*x_v (+ label).
/// Throws ZeroDecoration, MissingEdge.
FactorList decorated_factors(const Field& field, const Graph& g, const Decoration& dec,
                              const EdgeLabeling* labels = nullptr);

/// Sum of the monomials of the full expansion whose every variable degree is at
/// most `cap` (no cap when empty). Throws BudgetExceeded past `budget` stored terms.
SparsePoly expand_capped(const FactorList& f, std::optional<unsigned> cap,
                         std::size_t budget = kDefaultMonomialBudget);
/// Per-variable caps; caps.size() must equal f.num_vars().
SparsePoly expand_capped(const FactorList& f, const std::vector<unsigned>& caps,
                         std::size_t budget = kDefaultMonomialBudget);

/// Exact coefficient of one monomial, computed by dynamic programming over the
/// factors without expanding the product.
FieldElement coeff_of_monomial(const FactorList& f, const ExponentVector& m);

/// Least k such that the top-degree part has a nonzero monomial with every
/// degree <= k. Throws ZeroPolynomial, BudgetExceeded.
unsigned an_number(const FactorList& f, std::size_t budget = kDefaultMonomialBudget);

/// Product of the chosen coefficients for an orientation (edge -> head variable).
FieldElement orientation_weight(const Field& field, const Graph& g, const Decoration& dec, const Orientation& o);

}  // namespace nullcolor::polys
