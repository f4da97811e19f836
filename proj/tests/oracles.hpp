#pragma once

// Brute-force reference computations used only by the tests. None of these
// call into the library's expansion, coefficient, counting or bound code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "nullcolor/algebra.hpp"
#include "nullcolor/coloring.hpp"
#include "nullcolor/graphs.hpp"
#include "nullcolor/polys.hpp"

namespace oracle {

using nullcolor::algebra::Field;
using nullcolor::algebra::FieldElement;
using nullcolor::polys::ExponentVector;
using nullcolor::polys::FactorList;
using nullcolor::polys::SparsePoly;

/// Full expansion: one term chosen from every factor, all 3^m choices.
inline SparsePoly expand(const FactorList& f) {
  const Field& F = f.field();
  SparsePoly out(F, f.num_vars());
  const auto& fs = f.factors();
  std::vector<unsigned> e(static_cast<std::size_t>(f.num_vars()), 0);
  std::function<void(std::size_t, FieldElement)> rec = [&](std::size_t i, FieldElement c) {
    if (i == fs.size()) {
      out.accumulate(ExponentVector(e), c);
      return;
    }
    const auto& fac = fs[i];
    if (!F.is_zero(fac.a)) {
      ++e[fac.u];
      rec(i + 1, F.mul(c, fac.a));
      --e[fac.u];
    }
    if (!F.is_zero(fac.b)) {
      ++e[fac.v];
      rec(i + 1, F.mul(c, fac.b));
      --e[fac.v];
    }
    if (!F.is_zero(fac.c)) rec(i + 1, F.mul(c, fac.c));
  };
  rec(0, F.one());
  return out;
}

/// Terms of `p` whose every exponent is at most `cap`.
inline SparsePoly filter_cap(const SparsePoly& p, unsigned cap) {
  SparsePoly out(p.field(), p.num_vars());
  for (const auto& [m, c] : p.terms())
    if (m.max_degree() <= cap) out.accumulate(m, c);
  return out;
}

/// Coefficient of `m` in a homogeneous product, summed over the ways of giving
/// every factor a head variable (an orientation, for graph factors) whose
/// in-degree vector is `m`. Depth-first with suffix-capacity pruning.
inline FieldElement orientation_coefficient(const FactorList& f, const ExponentVector& m) {
  const Field& F = f.field();
  const auto& fs = f.factors();
  const std::size_t n = static_cast<std::size_t>(f.num_vars());
  if (m.size() != n) return F.zero();
  unsigned total = 0;
  for (std::size_t i = 0; i < n; ++i) total += m[i];
  if (total != fs.size()) return F.zero();
  // cap[i][w]: factors i.. that can still send degree to w.
  std::vector<std::vector<unsigned>> cap(fs.size() + 1, std::vector<unsigned>(n, 0));
  for (std::size_t i = fs.size(); i-- > 0;) {
    cap[i] = cap[i + 1];
    if (!F.is_zero(fs[i].a)) ++cap[i][fs[i].u];
    if (!F.is_zero(fs[i].b) && (fs[i].v != fs[i].u || F.is_zero(fs[i].a))) ++cap[i][fs[i].v];
  }
  std::vector<unsigned> rem(m.values());
  FieldElement sum = F.zero();
  std::function<void(std::size_t, FieldElement)> rec = [&](std::size_t i, FieldElement c) {
    for (std::size_t w = 0; w < n; ++w)
      if (rem[w] > cap[i][w]) return;
    if (i == fs.size()) {
      sum = F.add(sum, c);
      return;
    }
    const auto& fac = fs[i];
    if (!F.is_zero(fac.a) && rem[fac.u] > 0) {
      --rem[fac.u];
      rec(i + 1, F.mul(c, fac.a));
      ++rem[fac.u];
    }
    if (!F.is_zero(fac.b) && rem[fac.v] > 0) {
      --rem[fac.v];
      rec(i + 1, F.mul(c, fac.b));
      ++rem[fac.v];
    }
  };
  rec(0, F.one());
  return sum;
}

/// Value of the product of factors at a point, by direct substitution.
inline FieldElement evaluate(const FactorList& f, const std::vector<FieldElement>& x) {
  const Field& F = f.field();
  FieldElement r = F.one();
  for (const auto& fac : f.factors())
    r = F.mul(r, F.add(F.add(F.mul(fac.a, x[fac.u]), F.mul(fac.b, x[fac.v])), fac.c));
  return r;
}

/// Calls visit(point) for every point of the list grid, last variable fastest.
inline void for_each_point(const std::vector<std::vector<FieldElement>>& lists,
                           const std::function<void(const std::vector<FieldElement>&)>& visit) {
  const std::size_t n = lists.size();
  for (const auto& l : lists)
    if (l.empty()) return;
  std::vector<std::size_t> idx(n, 0);
  std::vector<FieldElement> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = lists[i][0];
  while (true) {
    visit(x);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++idx[i] < lists[i].size()) {
        x[i] = lists[i][idx[i]];
        break;
      }
      idx[i] = 0;
      x[i] = lists[i][0];
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

inline std::uint64_t count_nonzero(const FactorList& f, const std::vector<std::vector<FieldElement>>& lists) {
  std::uint64_t count = 0;
  for_each_point(lists, [&](const std::vector<FieldElement>& x) {
    if (!f.field().is_zero(evaluate(f, x))) ++count;
  });
  return count;
}

/// Least max-degree over the nonzero top-degree monomials of an expansion.
inline unsigned an_number(const SparsePoly& p) {
  unsigned top = 0;
  for (const auto& [m, c] : p.terms()) top = std::max(top, m.total_degree());
  unsigned best = ~0u;
  for (const auto& [m, c] : p.terms())
    if (m.total_degree() == top) best = std::min(best, m.max_degree());
  return best;
}

/// min prod q_i over every vector 1 <= q_i <= sizes[i] with sum >= S - d.
inline std::uint64_t min_product(const std::vector<std::uint64_t>& sizes, long long d) {
  long long S = 0;
  for (auto s : sizes) S += static_cast<long long>(s);
  std::vector<std::uint64_t> q(sizes.size(), 1);
  std::uint64_t best = ~std::uint64_t{0};
  while (true) {
    long long sum = 0;
    std::uint64_t prod = 1;
    for (auto v : q) {
      sum += static_cast<long long>(v);
      prod *= v;
    }
    if (sum >= S - d) best = std::min(best, prod);
    std::size_t i = 0;
    while (i < q.size() && q[i] == sizes[i]) q[i++] = 1;
    if (i == q.size()) return best;
    ++q[i];
  }
}

/// Least over all vertex orderings of 1 + max number of earlier neighbours.
inline int coloring_number(const nullcolor::graphs::Graph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  int best = g.order() + 1;
  do {
    std::vector<int> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    int worst = 0;
    for (int v = 0; v < g.order(); ++v) {
      int back = 0;
      for (int w : g.neighbors(v))
        if (pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(v)]) ++back;
      worst = std::max(worst, back);
    }
    best = std::min(best, worst + 1);
  } while (std::next_permutation(order.begin(), order.end()));
  return g.order() == 0 ? 1 : best;
}

/// Colorings c with (c(head) - c(tail)) mod m != label on every edge, cyclic group only.
inline std::uint64_t count_cyclic_colorings(const nullcolor::graphs::Graph& g, const std::vector<int>& tails,
                                            const std::vector<int>& heads, std::uint64_t m,
                                            const std::vector<std::uint64_t>& labels,
                                            const std::vector<std::vector<std::uint64_t>>& lists) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  std::vector<std::uint64_t> c(n);
  std::uint64_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == n) {
      for (std::size_t e = 0; e < tails.size(); ++e)
        if ((c[heads[e]] + m - c[tails[e]]) % m == labels[e]) return;
      ++count;
      return;
    }
    for (auto x : lists[v]) {
      c[v] = x;
      rec(v + 1);
    }
  };
  rec(0);
  return count;
}

}  // namespace oracle
