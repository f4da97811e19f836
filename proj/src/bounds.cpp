#include "nullcolor/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nullcolor/error.hpp"

namespace nullcolor::bounds {

namespace {

mpz_class power(std::uint64_t base, std::uint64_t exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

mpz_class power(const mpz_class& base, std::uint64_t exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

}  // namespace

MinProduct af_min_product(const std::vector<std::uint64_t>& sizes, long long d) {
  if (sizes.empty()) throw Error(ErrorCode::MalformedInput, "no list sizes given");
  if (d < 0) throw Error(ErrorCode::Infeasible, "degree must be non-negative");
  for (auto s : sizes)
    if (s == 0) throw Error(ErrorCode::PositiveRequired, "list sizes must be positive");
  const std::size_t n = sizes.size();
  const std::uint64_t S = std::accumulate(sizes.begin(), sizes.end(), std::uint64_t{0});
  const std::uint64_t need = static_cast<std::uint64_t>(d) >= S ? 0 : S - static_cast<std::uint64_t>(d);

  // best[i][r]: least prod q_j over j >= i with sum q_j >= r.
  std::vector<std::vector<mpz_class>> best(n + 1, std::vector<mpz_class>(need + 1));
  std::vector<std::vector<char>> ok(n + 1, std::vector<char>(need + 1, 0));
  ok[n][0] = 1;
  best[n][0] = 1;
  for (std::size_t i = n; i-- > 0;)
    for (std::uint64_t r = 0; r <= need; ++r)
      for (std::uint64_t q = 1; q <= sizes[i]; ++q) {
        const std::uint64_t rest = r > q ? r - q : 0;
        if (!ok[i + 1][rest]) continue;
        const mpz_class cand = best[i + 1][rest] * q;
        if (!ok[i][r] || cand < best[i][r]) {
          best[i][r] = cand;
          ok[i][r] = 1;
        }
      }
  if (!ok[0][need]) throw Error(ErrorCode::Infeasible, "no feasible q vector");

  MinProduct out;
  out.bound = best[0][need];
  std::uint64_t r = need;
  mpz_class target = out.bound;
  for (std::size_t i = 0; i < n; ++i)
    for (std::uint64_t q = 1; q <= sizes[i]; ++q) {
      const std::uint64_t rest = r > q ? r - q : 0;
      if (ok[i + 1][rest] && best[i + 1][rest] * q == target) {
        out.q.push_back(q);
        target = best[i + 1][rest];
        r = rest;
        break;
      }
    }
  return out;
}

double WeakBound::approx() const {
  return std::pow(static_cast<double>(t), static_cast<double>(num) / static_cast<double>(den));
}

std::string WeakBound::to_string() const {
  return std::to_string(t) + "^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

WeakBound af_weak_bound(long long S, long long n, long long d, long long t) {
  if (t < 2) throw Error(ErrorCode::PreconditionViolated, "the weak bound needs t >= 2");
  if (n < 0 || d < 0 || S < n + d) throw Error(ErrorCode::PreconditionViolated, "the weak bound needs S >= n + d");
  return {static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(S - n - d), static_cast<std::uint64_t>(t - 1)};
}

bool at_least(const mpz_class& value, const WeakBound& b) {
  if (value < 0) return false;
  return power(value, b.den) >= power(b.t, b.num);
}

LemmaCheck lemma_product_check(const std::vector<std::uint64_t>& a) {
  if (a.empty()) throw Error(ErrorCode::PositiveRequired, "no entries given");
  for (auto x : a)
    if (x < 1) throw Error(ErrorCode::PositiveRequired, "entries must be positive");
  const std::uint64_t t = *std::max_element(a.begin(), a.end());
  if (t < 2) throw Error(ErrorCode::DegenerateMax, "largest entry must be at least 2");
  const std::uint64_t S = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  mpz_class prod = 1;
  for (auto x : a) prod *= x;
  LemmaCheck out;
  out.lhs = power(prod, t - 1);
  out.rhs = power(t, S - a.size());
  out.holds = out.lhs >= out.rhs;
  return out;
}

bool convexity_holds(std::uint64_t x, std::uint64_t t) {
  if (t < 2) throw Error(ErrorCode::DegenerateMax, "t must be at least 2");
  if (x < 1) throw Error(ErrorCode::PositiveRequired, "x must be positive");
  return power(x, t - 1) >= power(t, x - 1);
}

std::uint64_t count_nonzero_points(const polys::FactorList& f, const coloring::ListAssignment& lists,
                                   std::uint64_t budget, kernels::Backend backend) {
  lists.validate(f.field(), f.num_vars());
  const auto p = coloring::factor_grid(f, lists);
  if (p.grid_size() > budget)
    throw Error(ErrorCode::BudgetExceeded, "grid of " + std::to_string(p.grid_size()) + " points exceeds budget");
  return kernels::count(p, backend);
}

std::uint64_t count_nonzero_points(const polys::SparsePoly& f, const coloring::ListAssignment& lists,
                                   std::uint64_t budget) {
  lists.validate(f.field(), f.num_vars());
  std::uint64_t total_points = 1;
  for (const auto& l : lists.lists()) {
    total_points *= l.size();
    if (total_points > budget)
      throw Error(ErrorCode::BudgetExceeded, "grid exceeds budget of " + std::to_string(budget) + " points");
  }
  const std::size_t n = lists.size();
  std::uint64_t count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
  for (std::int64_t code = 0; code < static_cast<std::int64_t>(total_points); ++code) {
    std::vector<algebra::FieldElement> point(n);
    auto rest = static_cast<std::uint64_t>(code);
    for (std::size_t i = 0; i < n; ++i) {
      point[i] = lists[i][rest % lists[i].size()];
      rest /= lists[i].size();
    }
    if (!f.field().is_zero(f.evaluate(point))) ++count;
  }
  return count;
}

}  // namespace nullcolor::bounds
