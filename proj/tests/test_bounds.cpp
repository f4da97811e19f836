#include <doctest.h>

#include "nullcolor/bounds.hpp"
#include "nullcolor/corpus.hpp"
#include "nullcolor/error.hpp"
#include "oracles.hpp"

using namespace nullcolor;
using namespace nullcolor::bounds;
using algebra::Field;
using algebra::FieldElement;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvariantViolation;
}

mpz_class pow(std::uint64_t base, std::uint64_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

}  // namespace

TEST_CASE("af_min_product examples") {
  const auto a = af_min_product({3, 3}, 2);
  CHECK(a.bound == 3);
  CHECK(a.q == std::vector<std::uint64_t>{1, 3});
  const auto b = af_min_product({2, 4, 5}, 0);
  CHECK(b.bound == 40);
  CHECK(af_min_product({2, 4, 5}, 8).bound == 1);
  CHECK(af_min_product({2, 4, 5}, 100).bound == 1);
  CHECK(code_of([] { af_min_product({}, 1); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { af_min_product({3, 0}, 1); }) == ErrorCode::PositiveRequired);
  CHECK(code_of([] { af_min_product({3, 2}, -1); }) == ErrorCode::Infeasible);
}

TEST_CASE("af_min_product against full enumeration") {
  corpus::Rng rng(2);
  for (int i = 0; i < 300; ++i) {
    std::vector<std::uint64_t> sizes(1 + corpus::draw(rng, 5));
    long long S = 0;
    for (auto& s : sizes) S += static_cast<long long>(s = 1 + corpus::draw(rng, 5));
    const long long d = static_cast<long long>(corpus::draw(rng, static_cast<std::uint64_t>(S + 2)));
    const auto res = af_min_product(sizes, d);
    CHECK(res.bound == oracle::min_product(sizes, d));
    long long sum = 0;
    mpz_class prod = 1;
    for (std::size_t k = 0; k < sizes.size(); ++k) {
      CHECK(res.q[k] >= 1);
      CHECK(res.q[k] <= sizes[k]);
      sum += static_cast<long long>(res.q[k]);
      prod *= static_cast<unsigned long>(res.q[k]);
    }
    CHECK(sum >= S - d);
    CHECK(prod == res.bound);
  }
}

TEST_CASE("weak bound") {
  for (long long n = 3; n <= 12; ++n) {
    const auto w = af_weak_bound(5 * n, n, 3 * n - 6, 5);
    CHECK(w.t == 5);
    CHECK(w.num == static_cast<std::uint64_t>(n + 6));
    CHECK(w.den == 4);
  }
  const auto one = af_weak_bound(10, 4, 6, 3);
  CHECK(one.num == 0);
  CHECK(at_least(1, one));
  CHECK(one.approx() == doctest::Approx(1.0));
  CHECK(code_of([] { af_weak_bound(10, 4, 2, 1); }) == ErrorCode::PreconditionViolated);
  CHECK(code_of([] { af_weak_bound(5, 4, 2, 3); }) == ErrorCode::PreconditionViolated);
  const auto w = af_weak_bound(20, 4, 6, 5);
  CHECK(w.to_string() == "5^(10/4)");
  // 5^(10/4) = 55.9...
  CHECK(at_least(56, w));
  CHECK_FALSE(at_least(55, w));
}

TEST_CASE("convexity inequality, exhaustive") {
  for (std::uint64_t t = 2; t <= 64; ++t)
    for (std::uint64_t x = 1; x <= t; ++x) {
      CHECK(convexity_holds(x, t));
      CHECK(pow(x, t - 1) >= pow(t, x - 1));
    }
  CHECK_FALSE(convexity_holds(5, 4));
}

TEST_CASE("lemma product check") {
  const auto single = lemma_product_check({7});
  CHECK(single.holds);
  CHECK(single.lhs == single.rhs);
  const auto two = lemma_product_check({2, 2});
  CHECK(two.lhs == 4);
  CHECK(two.rhs == 4);
  CHECK(code_of([] { lemma_product_check({1, 1, 1}); }) == ErrorCode::DegenerateMax);
  CHECK(code_of([] { lemma_product_check({0, 2}); }) == ErrorCode::PositiveRequired);

  // Exhaustive over n <= 5, entries <= 6.
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::uint64_t> a(n, 1);
    while (true) {
      std::uint64_t t = 0, S = 0;
      mpz_class prod = 1;
      for (auto v : a) {
        t = std::max(t, v);
        S += v;
        prod *= static_cast<unsigned long>(v);
      }
      if (t >= 2) {
        const auto r = lemma_product_check(a);
        CHECK(r.holds);
        CHECK(r.lhs == pow(prod.get_ui(), t - 1));
        CHECK(r.rhs == pow(t, S - n));
      }
      std::size_t i = 0;
      while (i < n && a[i] == 6) a[i++] = 1;
      if (i == n) break;
      ++a[i];
    }
  }
}

TEST_CASE("count_nonzero_points") {
  const Field F = Field::prime(5);
  polys::FactorList constant(F, 2);
  constant.add({0, F.zero(), 1, F.zero(), F.from_int(3)});
  const coloring::ListAssignment lists({{F.zero(), F.one()}, {F.zero(), F.one(), F.from_int(2)}});
  CHECK(count_nonzero_points(constant, lists) == 6);
  polys::FactorList vanishing(F, 2);
  vanishing.add({0, F.one(), 1, F.zero(), F.zero()});
  const coloring::ListAssignment zeros({{F.zero()}, {F.zero(), F.one()}});
  CHECK(count_nonzero_points(vanishing, zeros) == 0);
  CHECK(count_nonzero_points(polys::expand_capped(vanishing, std::nullopt), zeros) == 0);
}

TEST_CASE("Alon-Furedi chain on random factor products") {
  corpus::Rng rng(3);
  const Field F = Field::prime(5);
  int tested = 0;
  for (int i = 0; i < 400; ++i) {
    const int n = 1 + static_cast<int>(corpus::draw(rng, 4));
    polys::FactorList f(F, n);
    const int m = static_cast<int>(corpus::draw(rng, 7));
    for (int k = 0; k < m; ++k) {
      const int u = static_cast<int>(corpus::draw(rng, n)), v = static_cast<int>(corpus::draw(rng, n));
      f.add({u, corpus::random_element(F, rng), v, corpus::random_element(F, rng), corpus::random_element(F, rng)});
    }
    std::vector<std::vector<FieldElement>> raw;
    std::vector<std::uint64_t> sizes;
    for (int v = 0; v < n; ++v) {
      auto el = F.elements();
      std::shuffle(el.begin(), el.end(), rng);
      el.resize(2 + corpus::draw(rng, 4));
      sizes.push_back(el.size());
      raw.push_back(el);
    }
    const coloring::ListAssignment lists(raw);
    const auto count = count_nonzero_points(f, lists);
    CHECK(count == oracle::count_nonzero(f, raw));
    CHECK(count_nonzero_points(f, lists, coloring::kDefaultGridBudget, kernels::Backend::Reference) == count);
    const auto poly = polys::expand_capped(f, std::nullopt);
    CHECK(count_nonzero_points(poly, lists) == count);
    if (count == 0 || poly.empty()) continue;
    unsigned d = 0;
    for (const auto& [mono, c] : poly.terms()) d = std::max(d, mono.total_degree());
    long long S = 0, t = 0;
    for (auto s : sizes) {
      S += static_cast<long long>(s);
      t = std::max(t, static_cast<long long>(s));
    }
    const auto mp = af_min_product(sizes, d);
    CHECK(mpz_class(static_cast<unsigned long>(count)) >= mp.bound);
    if (S >= n + static_cast<long long>(d)) CHECK(at_least(mp.bound, af_weak_bound(S, n, d, t)));
    ++tested;
  }
  CHECK(tested > 100);
}
