#include <doctest.h>

#include "nullcolor/corpus.hpp"
#include "nullcolor/kernels.hpp"

using namespace nullcolor::kernels;
namespace corpus = nullcolor::corpus;

namespace {

GridProblem random_problem(corpus::Rng& rng) {
  GridProblem p;
  const int n = 1 + static_cast<int>(corpus::draw(rng, 6));
  for (int v = 0; v < n; ++v) p.domain.push_back(1 + static_cast<std::uint32_t>(corpus::draw(rng, 5)));
  if (corpus::draw(rng, 2)) {
    for (int v = 0; v < n; ++v) {
      std::vector<char> mask(p.domain[v]);
      for (auto& c : mask) c = corpus::draw(rng, 4) != 0;
      p.unary.push_back(mask);
    }
  }
  const int pairs = static_cast<int>(corpus::draw(rng, 8));
  for (int i = 0; i < pairs && n >= 2; ++i) {
    PairConstraint c;
    c.u = static_cast<int>(corpus::draw(rng, n));
    c.v = static_cast<int>(corpus::draw(rng, n));
    if (c.u == c.v) continue;
    c.allowed.resize(p.domain[c.u] * p.domain[c.v]);
    for (auto& a : c.allowed) a = corpus::draw(rng, 5) != 0;
    p.pairs.push_back(c);
  }
  return p;
}

}  // namespace

TEST_CASE("counting kernels agree with the odometer reference") {
  corpus::Rng rng(1);
  for (int i = 0; i < 500; ++i) {
    const auto p = random_problem(rng);
    const auto expected = count_reference(p);
    CHECK(count_backtrack(p) == expected);
    CHECK(count_parallel(p) == expected);
  }
}

TEST_CASE("infeasible and empty problems") {
  GridProblem p;
  CHECK(count_reference(p) == 1);
  CHECK(count_parallel(p) == 1);
  p.domain = {3, 4};
  CHECK(count_parallel(p) == 12);
  p.infeasible = true;
  CHECK(count_reference(p) == 0);
  CHECK(count_parallel(p) == 0);
  GridProblem zero;
  zero.domain = {3, 0};
  CHECK(count_parallel(zero) == 0);
  CHECK(zero.grid_size() == 0);
}

TEST_CASE("a larger problem exercises the split") {
  GridProblem p;
  p.domain.assign(9, 5);
  for (int u = 0; u < 9; ++u) {
    PairConstraint c{u, (u + 1) % 9, std::vector<char>(25, 1)};
    for (int j = 0; j < 5; ++j) c.allowed[j * 5 + j] = 0;
    p.pairs.push_back(c);
  }
  // Proper 5-colorings of C9: (k-1)^n + (-1)^n (k-1).
  CHECK(count_parallel(p) == 262144 - 4);
  CHECK(count_reference(p) == 262144 - 4);
}

TEST_CASE("argmin is deterministic with ties to the smallest index") {
  auto f = [](std::uint64_t i) { return (i * 7919) % 101 + (i % 13 == 5 ? 0 : 3); };
  for (std::uint64_t n : {1ull, 50ull, 1000ull, 20000ull}) {
    const auto a = argmin_reference(n, f);
    const auto b = argmin_parallel(n, f);
    CHECK(a.index == b.index);
    CHECK(a.value == b.value);
  }
  const auto flat = argmin_parallel(5000, [](std::uint64_t) { return std::uint64_t{4}; });
  CHECK(flat.index == 0);
}
