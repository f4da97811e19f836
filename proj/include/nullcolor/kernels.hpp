#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include <omp.h>

/// Counting kernels over finite grids with pairwise constraints. Each kernel
/// has a plain serial reference (full odometer enumeration) kept for testing
/// and a pruned OpenMP version used by the library.
namespace nullcolor::kernels {

/// allowed[i * domain[v] + j] says whether (value i at u, value j at v) is allowed.
struct PairConstraint {
  int u = 0;
  int v = 0;
  std::vector<char> allowed;
};

struct GridProblem {
  std::vector<std::uint32_t> domain;
  /// Empty, or one mask per variable over its domain.
  std::vector<std::vector<char>> unary;
  std::vector<PairConstraint> pairs;
  /// Set when some constraint can never hold (e.g. a zero constant factor).
  bool infeasible = false;

  /// Product of the domain sizes, saturating at UINT64_MAX.
  std::uint64_t grid_size() const noexcept;
};

enum class Backend { Reference, Parallel };

/// Odometer over every grid point; checks every constraint at every point.
std::uint64_t count_reference(const GridProblem& p);
/// Backtracking with constraint checks as soon as both ends are assigned.
std::uint64_t count_backtrack(const GridProblem& p);
/// Backtracking with the top levels split across OpenMP threads.
std::uint64_t count_parallel(const GridProblem& p);

inline std::uint64_t count(const GridProblem& p, Backend b) {
  return b == Backend::Reference ? count_reference(p) : count_parallel(p);
}

/// Point of least value; ties go to the smallest index, so the result does not
/// depend on the schedule.
struct ArgMin {
  std::uint64_t index = 0;
  std::uint64_t value = std::numeric_limits<std::uint64_t>::max();

  bool better_than(const ArgMin& o) const noexcept {
    return value < o.value || (value == o.value && index < o.index);
  }
};

template <class F>
ArgMin argmin_reference(std::uint64_t n, F&& f) {
  ArgMin best;
  for (std::uint64_t i = 0; i < n; ++i) {
    const ArgMin cand{i, f(i)};
    if (cand.better_than(best)) best = cand;
  }
  return best;
}

template <class F>
ArgMin argmin_parallel(std::uint64_t n, F&& f) {
  ArgMin best;
#pragma omp parallel
  {
    ArgMin local;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
      const ArgMin cand{static_cast<std::uint64_t>(i), f(static_cast<std::uint64_t>(i))};
      if (cand.better_than(local)) local = cand;
    }
#pragma omp critical(nullcolor_argmin)
    if (local.better_than(best)) best = local;
  }
  return best;
}

}  // namespace nullcolor::kernels
