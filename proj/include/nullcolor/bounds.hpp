#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "nullcolor/coloring.hpp"
#include "nullcolor/polys.hpp"

namespace nullcolor::bounds {

struct MinProduct {
  mpz_class bound;
  /// Lexicographically smallest minimiser.
  std::vector<std::uint64_t> q;
};

/// min prod q_i over integers 1 <= q_i <= sizes[i] with sum q_i >= S - d.
/// Throws MalformedInput (no sizes), PositiveRequired (a zero size), Infeasible (d < 0).
MinProduct af_min_product(const std::vector<std::uint64_t>& sizes, long long d);

/// t^(num/den) with num = S - n - d and den = t - 1, kept unreduced.
struct WeakBound {
  std::uint64_t t = 2;
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double approx() const;
  std::string to_string() const;
};

/// Throws PreconditionViolated unless S >= n + d and t >= 2.
WeakBound af_weak_bound(long long S, long long n, long long d, long long t);

/// Exact test value >= t^(num/den), i.e. value^den >= t^num.
bool at_least(const mpz_class& value, const WeakBound& b);

struct LemmaCheck {
  bool holds = false;
  /// (prod a_i)^(t-1)
  mpz_class lhs;
  /// t^(S-n)
  mpz_class rhs;
};

/// prod a_i >= t^((S-n)/(t-1)) with t = max a_i, compared as lhs >= rhs.
/// Throws PositiveRequired, DegenerateMax.
LemmaCheck lemma_product_check(const std::vector<std::uint64_t>& a);

/// x >= t^((x-1)/(t-1)), compared as x^(t-1) >= t^(x-1). Requires t >= 2.
bool convexity_holds(std::uint64_t x, std::uint64_t t);

/// Number of grid points where the product of factors is nonzero.
/// Throws BudgetExceeded.
std::uint64_t count_nonzero_points(const polys::FactorList& f, const coloring::ListAssignment& lists,
                                   std::uint64_t budget = coloring::kDefaultGridBudget,
                                   kernels::Backend backend = kernels::Backend::Parallel);
/// Same for an explicit polynomial, by evaluation at every grid point.
std::uint64_t count_nonzero_points(const polys::SparsePoly& f, const coloring::ListAssignment& lists,
                                   std::uint64_t budget = coloring::kDefaultGridBudget);

}  // namespace nullcolor::bounds
