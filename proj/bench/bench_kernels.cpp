// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "nullcolor/bounds.hpp"
#include "nullcolor/coloring.hpp"
#include "nullcolor/corpus.hpp"

using namespace nullcolor;
using kernels::Backend;

namespace {

graphs::NearTriangulation triangulation(int n) {
  corpus::Rng rng(static_cast<std::uint64_t>(n));
  return corpus::random_triangulation(n, rng, n);
}

void count_colorings(benchmark::State& state, Backend backend) {
  const auto field = algebra::Field::prime(5);
  const int n = static_cast<int>(state.range(0));
  const auto tri = triangulation(n);
  corpus::Rng rng(1);
  const auto dec = corpus::random_decoration(field, tri.graph, rng);
  const auto lab = corpus::random_labeling(field, tri.graph, rng);
  const auto lists = coloring::ListAssignment::full(field, n);
  for (auto _ : state)
    benchmark::DoNotOptimize(coloring::count_colorings(field, tri.graph, dec, lab, lists,
                                                       coloring::kDefaultGridBudget, backend));
}

// The odometer reference checks every point, so this pits full enumeration
// against the pruned parallel search.
void count_grid(benchmark::State& state, Backend backend) {
  const auto field = algebra::Field::prime(7);
  const int n = static_cast<int>(state.range(0));
  const auto tri = triangulation(n);
  corpus::Rng rng(2);
  const auto f = polys::decorated_factors(field, tri.graph, corpus::random_decoration(field, tri.graph, rng));
  const auto lists = coloring::ListAssignment::full(field, n);
  for (auto _ : state) benchmark::DoNotOptimize(bounds::count_nonzero_points(f, lists, 1'000'000'000, backend));
}

void adversary(benchmark::State& state, Backend backend) {
  const auto g = corpus::named_graph(state.range(0) == 0 ? "k4" : "octahedron");
  const auto group = coloring::AbelianGroup::cyclic(static_cast<std::uint32_t>(state.range(1)));
  const auto lists = coloring::full_group_lists(group, g.order());
  for (auto _ : state)
    benchmark::DoNotOptimize(coloring::adversarial_min(g, polys::Orientation::canonical(g), group, lists,
                                                       coloring::kDefaultLabelingBudget,
                                                       coloring::kDefaultGridBudget, backend));
}

}  // namespace

BENCHMARK_CAPTURE(count_colorings, reference, Backend::Reference)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(count_colorings, parallel, Backend::Parallel)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(count_grid, reference, Backend::Reference)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(count_grid, parallel, Backend::Parallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(adversary, reference, Backend::Reference)->Args({0, 3})->Args({0, 4})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(adversary, parallel, Backend::Parallel)->Args({0, 3})->Args({0, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
