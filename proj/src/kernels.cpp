#include "nullcolor/kernels.hpp"

#include <algorithm>

namespace nullcolor::kernels {

std::uint64_t GridProblem::grid_size() const noexcept {
  std::uint64_t total = 1;
  for (auto d : domain) {
    if (d == 0) return 0;
    if (total > std::numeric_limits<std::uint64_t>::max() / d) return std::numeric_limits<std::uint64_t>::max();
    total *= d;
  }
  return total;
}

namespace {

bool unary_ok(const GridProblem& p, std::size_t var, std::uint32_t value) {
  return p.unary.empty() || p.unary[var].empty() || p.unary[var][value];
}

bool pair_ok(const GridProblem& p, const PairConstraint& c, std::uint32_t a, std::uint32_t b) {
  return c.allowed[static_cast<std::size_t>(a) * p.domain[c.v] + b] != 0;
}

// Variables in search order plus, per position, the constraints that become
// checkable once that position is assigned.
struct Plan {
  std::vector<int> order;
  std::vector<std::vector<std::uint32_t>> values;  // candidate values per position
  std::vector<std::vector<std::size_t>> checks;    // constraint indices per position
  std::size_t searched = 0;                        // positions that carry constraints
  std::uint64_t free_factor = 1;                   // product over unconstrained positions
  bool empty = false;
};

Plan make_plan(const GridProblem& p) {
  const std::size_t n = p.domain.size();
  Plan plan;
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t i = 0; i < p.pairs.size(); ++i) {
    incident[p.pairs[i].u].push_back(i);
    if (p.pairs[i].v != p.pairs[i].u) incident[p.pairs[i].v].push_back(i);
  }
  // Greedy order: most constraints into already placed variables, then most constraints.
  std::vector<char> placed(n, 0);
  std::vector<int> pos(n, -1);
  for (std::size_t step = 0; step < n; ++step) {
    int pick = -1;
    std::size_t best_back = 0, best_deg = 0;
    for (std::size_t w = 0; w < n; ++w) {
      if (placed[w] || incident[w].empty()) continue;
      std::size_t back = 0;
      for (auto ci : incident[w]) {
        const auto& c = p.pairs[ci];
        const std::size_t other = c.u == static_cast<int>(w) ? c.v : c.u;
        if (placed[other]) ++back;
      }
      if (pick < 0 || back > best_back || (back == best_back && incident[w].size() > best_deg)) {
        pick = static_cast<int>(w);
        best_back = back;
        best_deg = incident[w].size();
      }
    }
    if (pick < 0) break;
    placed[pick] = 1;
    pos[pick] = static_cast<int>(plan.order.size());
    plan.order.push_back(pick);
  }
  plan.searched = plan.order.size();
  for (std::size_t w = 0; w < n; ++w) {
    if (placed[w]) continue;
    std::uint64_t ok = 0;
    for (std::uint32_t a = 0; a < p.domain[w]; ++a) ok += unary_ok(p, w, a);
    plan.free_factor *= ok;
  }
  plan.values.resize(plan.searched);
  plan.checks.resize(plan.searched);
  for (std::size_t i = 0; i < plan.searched; ++i) {
    const auto w = static_cast<std::size_t>(plan.order[i]);
    for (std::uint32_t a = 0; a < p.domain[w]; ++a)
      if (unary_ok(p, w, a)) plan.values[i].push_back(a);
    if (plan.values[i].empty()) plan.empty = true;
  }
  for (std::size_t ci = 0; ci < p.pairs.size(); ++ci)
    plan.checks[std::max(pos[p.pairs[ci].u], pos[p.pairs[ci].v])].push_back(ci);
  return plan;
}

struct Searcher {
  const GridProblem& p;
  const Plan& plan;
  std::vector<std::uint32_t> assignment;

  Searcher(const GridProblem& problem, const Plan& pl) : p(problem), plan(pl), assignment(problem.domain.size(), 0) {}

  bool consistent(std::size_t position) const {
    for (auto ci : plan.checks[position]) {
      const auto& c = p.pairs[ci];
      if (!pair_ok(p, c, assignment[c.u], assignment[c.v])) return false;
    }
    return true;
  }

  std::uint64_t run(std::size_t position) {
    if (position == plan.searched) return 1;
    const int w = plan.order[position];
    std::uint64_t total = 0;
    for (auto a : plan.values[position]) {
      assignment[w] = a;
      if (consistent(position)) total += run(position + 1);
    }
    return total;
  }
};

}  // namespace

std::uint64_t count_reference(const GridProblem& p) {
  if (p.infeasible) return 0;
  const std::size_t n = p.domain.size();
  for (auto d : p.domain)
    if (d == 0) return 0;
  std::vector<std::uint32_t> x(n, 0);
  std::uint64_t total = 0;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = unary_ok(p, i, x[i]);
    for (std::size_t i = 0; i < p.pairs.size() && ok; ++i) ok = pair_ok(p, p.pairs[i], x[p.pairs[i].u], x[p.pairs[i].v]);
    total += ok;
    std::size_t i = 0;
    while (i < n && ++x[i] == p.domain[i]) x[i++] = 0;
    if (i == n) break;
  }
  return total;
}

std::uint64_t count_backtrack(const GridProblem& p) {
  if (p.infeasible) return 0;
  const Plan plan = make_plan(p);
  if (plan.empty || plan.free_factor == 0) return 0;
  Searcher s(p, plan);
  return s.run(0) * plan.free_factor;
}

std::uint64_t count_parallel(const GridProblem& p) {
  if (p.infeasible) return 0;
  const Plan plan = make_plan(p);
  if (plan.empty || plan.free_factor == 0) return 0;

  // Split the first levels into enough independent prefixes to balance threads.
  const std::uint64_t target = 64ull * static_cast<std::uint64_t>(omp_get_max_threads());
  std::size_t depth = 0;
  std::uint64_t prefixes = 1;
  while (depth < plan.searched && prefixes < target) prefixes *= plan.values[depth++].size();

  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : total)
  for (std::int64_t code = 0; code < static_cast<std::int64_t>(prefixes); ++code) {
    Searcher s(p, plan);
    auto rest = static_cast<std::uint64_t>(code);
    bool ok = true;
    for (std::size_t i = 0; i < depth; ++i) {
      const auto& vals = plan.values[i];
      s.assignment[plan.order[i]] = vals[rest % vals.size()];
      rest /= vals.size();
    }
    for (std::size_t i = 0; i < depth && ok; ++i) ok = s.consistent(i);
    if (ok) total += s.run(depth);
  }
  return total * plan.free_factor;
}

}  // namespace nullcolor::kernels
