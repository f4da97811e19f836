#include <doctest.h>

#include "nullcolor/coloring.hpp"
#include "nullcolor/corpus.hpp"
#include "nullcolor/error.hpp"
#include "oracles.hpp"

using namespace nullcolor;
using namespace nullcolor::coloring;
using algebra::Field;
using algebra::FieldElement;
using polys::Decoration;
using polys::EdgeLabeling;
using polys::Orientation;

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

ListAssignment random_lists(const Field& F, int n, std::size_t size, corpus::Rng& rng) {
  std::vector<std::vector<FieldElement>> lists;
  for (int v = 0; v < n; ++v) {
    auto el = F.elements();
    std::shuffle(el.begin(), el.end(), rng);
    el.resize(size);
    lists.push_back(el);
  }
  return ListAssignment(lists);
}

}  // namespace

TEST_CASE("cn_solve on a single labeled edge") {
  const Field F = Field::prime(5);
  for (int l = 0; l < 5; ++l) {
    polys::FactorList f(F, 2);
    f.add({0, F.from_int(-1), 1, F.one(), F.from_int(-l)});
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b)
        for (int c = 0; c < 5; ++c) {
          if (b == c) continue;
          const ListAssignment lists({{F.from_int(a)}, {F.from_int(b), F.from_int(c)}});
          const auto sol = cn_solve(f, lists);
          CHECK_FALSE(F.is_zero(oracle::evaluate(f, sol.point)));
          CHECK(sol.point[0] == F.from_int(a));
        }
  }
}

TEST_CASE("cn_solve on K3 with random labels and 5-lists") {
  const Field F = Field::prime(5);
  const auto g = corpus::named_graph("k3");
  corpus::Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    const auto dec = corpus::random_decoration(F, g, rng);
    const auto lab = corpus::random_labeling(F, g, rng);
    const auto f = polys::decorated_factors(F, g, dec, &lab);
    const auto lists = ListAssignment::full(F, 3);
    const auto sol = cn_solve(f, lists);
    CHECK_FALSE(F.is_zero(oracle::evaluate(f, sol.point)));
    CHECK(oracle::count_nonzero(f, lists.lists()) > 0);
  }
}

TEST_CASE("cn_solve errors") {
  const Field F = Field::prime(5);
  const auto g = corpus::named_graph("k3");
  const auto f = polys::decorated_factors(F, g, Decoration::standard(g, F));
  const ListAssignment ones({{F.zero()}, {F.one()}, {F.from_int(2)}});
  const auto code = code_of([&] { cn_solve(f, ones); });
  CHECK((code == ErrorCode::ListTooSmall || code == ErrorCode::NoWitnessMonomial));
  // Total list size suffices, but x0^3 is the only monomial allowed and it does not occur.
  const ListAssignment lopsided({{F.zero(), F.one(), F.from_int(2), F.from_int(3)}, {F.zero()}, {F.one()}});
  CHECK(code_of([&] { cn_solve(f, lopsided); }) == ErrorCode::NoWitnessMonomial);
}

TEST_CASE("cn_solve with a supplied witness") {
  const Field F = Field::prime(7);
  const auto g = corpus::named_graph("k4");
  const auto f = polys::decorated_factors(F, g, Decoration::standard(g, F));
  const auto lists = ListAssignment::full(F, 4);
  const auto sol = cn_solve(f, lists, polys::ExponentVector(std::vector<unsigned>{3, 2, 1, 0}));
  CHECK(sol.witness.values() == std::vector<unsigned>{3, 2, 1, 0});
  CHECK_FALSE(F.is_zero(oracle::evaluate(f, sol.point)));
  CHECK(code_of([&] { cn_solve(f, lists, polys::ExponentVector(std::vector<unsigned>{2, 2, 2, 0})); }) ==
        ErrorCode::NoWitnessMonomial);
}

TEST_CASE("count_colorings") {
  const Field F = Field::prime(5);
  const graphs::Graph empty(2);
  CHECK(count_colorings(F, empty, Decoration{}, EdgeLabeling{}, ListAssignment::full(F, 2)) == 25);

  const auto k3 = corpus::named_graph("k3");
  Decoration d;
  for (const auto& e : k3.edges()) d.set(e, F.from_int(-1), F.one());
  CHECK(count_colorings(F, k3, d, EdgeLabeling::zeros(k3, F), ListAssignment::full(F, 3)) == 60);

  const auto k5 = corpus::named_graph("k5");
  CHECK(code_of([&] {
          count_colorings(F, k5, Decoration::standard(k5, F), EdgeLabeling::zeros(k5, F), ListAssignment::full(F, 5),
                          100);
        }) == ErrorCode::BudgetExceeded);
}

TEST_CASE("count_colorings agrees with direct substitution") {
  corpus::Rng rng(4);
  for (const Field& F : {Field::prime(5), Field::prime(7), Field::make({2, 3, {}}), Field::rationals()}) {
    for (int i = 0; i < 30; ++i) {
      const int n = 2 + static_cast<int>(corpus::draw(rng, 4));
      const auto g = corpus::random_graph(n, static_cast<int>(corpus::draw(rng, n * (n - 1) / 2 + 1)), rng);
      const auto dec = corpus::random_decoration(F, g, rng);
      const auto lab = corpus::random_labeling(F, g, rng);
      std::vector<std::vector<FieldElement>> raw;
      if (F.is_finite()) {
        raw = random_lists(F, n, 2 + corpus::draw(rng, 3), rng).lists();
      } else {
        for (int v = 0; v < n; ++v) raw.push_back({F.from_int(0), F.from_int(1), F.from_int(-2), F.from_int(3)});
      }
      const ListAssignment lists(raw);
      const auto f = polys::decorated_factors(F, g, dec, &lab);
      const auto expected = oracle::count_nonzero(f, raw);
      CHECK(count_colorings(F, g, dec, lab, lists, kDefaultGridBudget, Backend::Reference) == expected);
      CHECK(count_colorings(F, g, dec, lab, lists, kDefaultGridBudget, Backend::Parallel) == expected);
    }
  }
}

TEST_CASE("abelian groups") {
  const AbelianGroup g({2, 3});
  CHECK(g.order() == 6);
  CHECK(g.residues(5) == std::vector<std::uint32_t>{1, 2});
  CHECK(g.index({1, 0}) == 3);
  CHECK(g.add(5, 1) == g.index({1, 0}));
  CHECK(g.sub(0, 1) == g.index({0, 2}));
  CHECK(code_of([] { AbelianGroup({1}); }) == ErrorCode::MalformedInput);
}

TEST_CASE("adversarial labelings") {
  const auto z5 = AbelianGroup::cyclic(5);
  const graphs::Graph edge(2, {{0, 1}});
  const auto one = adversarial_min(edge, Orientation::canonical(edge), z5, full_group_lists(z5, 2));
  CHECK(one.min_count == 20);
  CHECK(one.labelings_examined == 5);
  CHECK(one.labeling == std::vector<std::uint64_t>{0});

  const graphs::Graph empty(3);
  const auto none = adversarial_min(empty, Orientation::canonical(empty), z5, full_group_lists(z5, 3));
  CHECK(none.min_count == 125);
  CHECK(none.labeling.empty());

  const auto k3 = corpus::named_graph("k3");
  const auto res = adversarial_min(k3, Orientation::canonical(k3), z5, full_group_lists(z5, 3));
  CHECK(res.labelings_examined == 125);
  CHECK(res.min_count >= 50);
  std::uint64_t brute_min = ~0ull;
  const std::vector<int> tails{0, 0, 1}, heads{1, 2, 2};
  for (std::uint64_t code = 0; code < 125; ++code) {
    const std::vector<std::uint64_t> labels{code % 5, code / 5 % 5, code / 25};
    brute_min = std::min(brute_min, oracle::count_cyclic_colorings(k3, tails, heads, 5, labels,
                                                                   full_group_lists(z5, 3)));
  }
  CHECK(res.min_count == brute_min);
  CHECK(count_group_colorings(k3, Orientation::canonical(k3), z5, res.labeling, full_group_lists(z5, 3)) ==
        res.min_count);

  CHECK(code_of([&] {
          adversarial_min(corpus::named_graph("k5"), Orientation::canonical(corpus::named_graph("k5")), z5,
                          full_group_lists(z5, 5), 1000);
        }) == ErrorCode::BudgetExceeded);
}

TEST_CASE("group counts match a direct count, both backends") {
  corpus::Rng rng(6);
  for (int i = 0; i < 40; ++i) {
    const int n = 2 + static_cast<int>(corpus::draw(rng, 4));
    const auto g = corpus::random_graph(n, static_cast<int>(corpus::draw(rng, n * (n - 1) / 2 + 1)), rng);
    const auto o = Orientation::from_code(g, rng());
    const std::uint32_t m = 2 + static_cast<std::uint32_t>(corpus::draw(rng, 5));
    const auto grp = AbelianGroup::cyclic(m);
    std::vector<std::uint64_t> labels;
    std::vector<int> tails, heads;
    for (std::size_t e = 0; e < g.size(); ++e) {
      labels.push_back(corpus::draw(rng, m));
      tails.push_back(o.tail(g, e));
      heads.push_back(o.head(g, e));
    }
    GroupLists lists;
    for (int v = 0; v < n; ++v) {
      std::vector<std::uint64_t> l;
      for (std::uint64_t x = 0; x < m; ++x)
        if (corpus::draw(rng, 3) != 0) l.push_back(x);
      if (l.empty()) l.push_back(0);
      lists.push_back(l);
    }
    const auto expected = oracle::count_cyclic_colorings(g, tails, heads, m, labels, lists);
    CHECK(count_group_colorings(g, o, grp, labels, lists, kDefaultGridBudget, Backend::Reference) == expected);
    CHECK(count_group_colorings(g, o, grp, labels, lists, kDefaultGridBudget, Backend::Parallel) == expected);
  }
}

TEST_CASE("non-cyclic groups in the counters") {
  // Z2 x Z2 on a single edge: each tail value forbids exactly one head value.
  const AbelianGroup v4({2, 2});
  const graphs::Graph edge(2, {{0, 1}});
  for (std::uint64_t l = 0; l < 4; ++l)
    CHECK(count_group_colorings(edge, Orientation::canonical(edge), v4, {l}, full_group_lists(v4, 2)) == 12);
}

TEST_CASE("cyclic embeddings") {
  const auto e5 = cyclic_embed(5, true);
  CHECK(e5.p == 2);
  CHECK(e5.totient == 4);
  CHECK(*e5.field.size() == 16);
  CHECK(algebra::element_order(e5.field, e5.generator) == 5);

  const auto e6 = cyclic_embed(6, true);
  CHECK(e6.p == 5);
  CHECK(*e6.field.size() == 25);
  CHECK(algebra::element_order(e6.field, e6.generator) == 6);

  const auto e7 = cyclic_embed(7, true);
  CHECK(e7.p == 2);
  CHECK(*e7.field.size() == 64);
  const auto e7small = cyclic_embed(7);
  CHECK(*e7small.field.size() == 8);
  CHECK(algebra::element_order(e7small.field, e7small.generator) == 7);

  for (std::uint64_t m = 2; m <= 18; ++m) {
    const auto e = cyclic_embed(m);
    CHECK(algebra::gcd(m, e.p) == 1);
    CHECK((*e.field.size() - 1) % m == 0);
    CHECK(algebra::element_order(e.field, e.generator) == m);
  }
  CHECK(code_of([] { cyclic_embed(23, true); }) == ErrorCode::FieldTooLarge);
  CHECK(code_of([] { cyclic_embed(1); }) == ErrorCode::MalformedInput);
}

TEST_CASE("multiplicative instances encode cyclic colorings") {
  for (std::uint64_t m = 2; m <= 9; ++m) {
    const auto emb = cyclic_embed(m);
    const auto& F = emb.field;
    std::vector<FieldElement> sub;
    for (std::uint64_t r = 0; r < m; ++r) sub.push_back(F.pow(emb.generator, r));
    for (std::uint64_t r = 0; r < m; ++r) CHECK(subgroup_log(emb, sub[r]) == r);
    const graphs::Graph edge(2, {{0, 1}});
    const auto o = Orientation::canonical(edge);
    for (std::uint64_t l = 0; l < m; ++l) {
      const auto f = multiplicative_instance(edge, o, {l}, emb);
      for (std::uint64_t a = 0; a < m; ++a)
        for (std::uint64_t b = 0; b < m; ++b) {
          const bool nonzero = !F.is_zero(oracle::evaluate(f, {sub[a], sub[b]}));
          CHECK(nonzero == ((b + m - a) % m != l));
        }
    }
    CHECK(code_of([&] { multiplicative_instance(edge, o, {m}, emb); }) == ErrorCode::LabelOutOfRange);
  }
  // Label 0 forbids equal values.
  const auto emb = cyclic_embed(5);
  const graphs::Graph edge(2, {{0, 1}});
  const auto f = multiplicative_instance(edge, Orientation::canonical(edge), {0}, emb);
  const auto lists = subgroup_lists(emb, full_group_lists(AbelianGroup::cyclic(5), 2));
  CHECK(oracle::count_nonzero(f, lists.lists()) == 20);
}

TEST_CASE("additive instances match the group counter") {
  const Field F = Field::prime(5);
  const auto z5 = AbelianGroup::cyclic(5);
  corpus::Rng rng(10);
  for (int i = 0; i < 20; ++i) {
    const auto g = corpus::random_graph(4, static_cast<int>(corpus::draw(rng, 7)), rng);
    const auto o = Orientation::from_code(g, rng());
    std::vector<std::uint64_t> labels;
    EdgeLabeling lab;
    for (const auto& e : g.edges()) {
      labels.push_back(corpus::draw(rng, 5));
      lab.set(e, F.from_int(static_cast<long long>(labels.back())));
    }
    const auto f = additive_instance(F, g, o, lab);
    CHECK(oracle::count_nonzero(f, ListAssignment::full(F, 4).lists()) ==
          count_group_colorings(g, o, z5, labels, full_group_lists(z5, 4)));
  }
}

TEST_CASE("list validation") {
  const Field F = Field::prime(5);
  CHECK(code_of([&] { ListAssignment({{F.one(), F.one()}}).validate(F, 1); }) == ErrorCode::MalformedInput);
  CHECK(code_of([&] { ListAssignment(std::vector<std::vector<FieldElement>>{{}}).validate(F, 1); }) == ErrorCode::MalformedInput);
  CHECK(code_of([&] { ListAssignment({{F.one()}}).validate(F, 2); }) == ErrorCode::MalformedInput);
  ListAssignment::full(F, 3).validate(F, 3);
}
