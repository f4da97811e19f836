#include <doctest.h>

#include <set>

#include "nullcolor/certify.hpp"
#include "nullcolor/corpus.hpp"
#include "nullcolor/error.hpp"
#include "oracles.hpp"

using namespace nullcolor;
using namespace nullcolor::certify;
using algebra::Field;
using graphs::Edge;
using polys::Decoration;

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

// The stored coefficient must match an orientation-sum recomputation and be nonzero.
void check_against_oracle(const polys::FactorList& target, const MonomialCertificate& cert) {
  const auto c = oracle::orientation_coefficient(target, cert.monomial);
  CHECK_FALSE(target.field().is_zero(c));
  CHECK(c == cert.coefficient);
}

std::set<std::set<int>> face_sets(const graphs::NearTriangulation& t) {
  std::set<std::set<int>> out;
  for (const auto& f : graphs::trace_faces(t.graph, t.embedding)) out.insert(std::set<int>(f.begin(), f.end()));
  return out;
}

const std::vector<Field>& fields() {
  static const std::vector<Field> fs{Field::prime(5), Field::prime(7), Field::rationals()};
  return fs;
}

}  // namespace

TEST_CASE("K3 base case") {
  const Field F = Field::prime(7);
  corpus::Rng rng(1);
  const auto nt = corpus::named_triangulation("k3");
  for (int i = 0; i < 10; ++i) {
    const auto dec = corpus::random_decoration(F, nt.graph, rng);
    const auto cert = nice_monomial(F, nt, 0, 1, dec);
    CHECK(cert.monomial.values() == std::vector<unsigned>{0, 0, 2});
    CHECK(cert.coefficient == F.mul(dec.coefficient_of({0, 2}, 2), dec.coefficient_of({1, 2}, 2)));
    REQUIRE(cert.trace.size() == 1);
    CHECK(cert.trace[0].kind == StepKind::Base);
  }
}

TEST_CASE("K4 nice monomial is w^2 z^3") {
  const auto nt = corpus::named_triangulation("k4");
  // Outer face 0,2,1 with interior 3.
  REQUIRE(nt.interior == std::vector<int>{3});
  corpus::Rng rng(2);
  for (const Field& F : fields()) {
    const auto dec = corpus::random_decoration(F, nt.graph, rng);
    const auto cert = nice_monomial(F, nt, 0, 2, dec);
    CHECK(cert.monomial.values() == std::vector<unsigned>{0, 2, 0, 3});
    const auto target = factors_without(F, nt.graph, dec, {{0, 2}});
    check_against_oracle(target, cert);
    // Every nice monomial of the full 5-factor expansion.
    std::vector<std::vector<unsigned>> nice;
    const auto expanded = oracle::expand(target);
    for (const auto& [m, c] : expanded.terms())
      if (m[0] == 0 && m[2] == 0 && m[1] <= 2 && m[3] <= 4) nice.push_back(m.values());
    CHECK(nice == std::vector<std::vector<unsigned>>{{0, 2, 0, 3}});
  }
  CHECK(code_of([&] { nice_monomial(Field::prime(5), nt, 0, 3, Decoration::standard(nt.graph, Field::prime(5))); }) ==
        ErrorCode::NotBoundaryEdge);
}

TEST_CASE("nice monomials on random near-triangulations") {
  corpus::Rng rng(100);
  std::set<StepKind> seen;
  for (int i = 0; i < 150; ++i) {
    const Field& F = fields()[static_cast<std::size_t>(i % 3)];
    const int n = 3 + static_cast<int>(corpus::draw(rng, 6));
    const int b = 3 + static_cast<int>(corpus::draw(rng, static_cast<std::uint64_t>(n - 2)));
    const auto nt = corpus::random_near_triangulation(n, b, rng, n);
    const auto dec = corpus::random_decoration(F, nt.graph, rng);
    const std::size_t k = corpus::draw(rng, nt.boundary.size());
    const int x = nt.boundary[k], y = nt.boundary[(k + 1) % nt.boundary.size()];
    const auto cert = nice_monomial(F, nt, x, y, dec);
    for (const auto& s : cert.trace) seen.insert(s.kind);
    CHECK(cert.monomial[x] == 0);
    CHECK(cert.monomial[y] == 0);
    for (int v = 0; v < n; ++v) CHECK(cert.monomial[v] <= (nt.on_boundary[v] ? 2u : 4u));
    const auto target = factors_without(F, nt.graph, dec, {graphs::make_edge(x, y)});
    check_against_oracle(target, cert);
    if (n <= 8) {
      const auto capped = polys::expand_capped(target, 4u);
      CHECK(capped.coefficient(cert.monomial) == cert.coefficient);
    }
  }
  for (auto kind : {StepKind::Base, StepKind::Chord, StepKind::BoundaryTriangle}) CHECK(seen.count(kind) == 1);
  CHECK((seen.count(StepKind::SpecialMonomial) + seen.count(StepKind::NoSpecial)) >= 1);
}

TEST_CASE("triangle deletion on K4 and the octahedron") {
  const Field F = Field::prime(5);
  corpus::Rng rng(3);
  const auto k4 = corpus::named_triangulation("k4");
  const auto dec = corpus::random_decoration(F, k4.graph, rng);
  const auto cert = triangle_deleted_monomial(F, k4, {0, 1, 2}, dec);
  CHECK(cert.monomial.values() == std::vector<unsigned>{0, 0, 0, 3});
  CHECK(cert.coefficient == F.mul(F.mul(dec.coefficient_of({0, 3}, 3), dec.coefficient_of({1, 3}, 3)),
                                  dec.coefficient_of({2, 3}, 3)));

  const auto oct = corpus::named_triangulation("octahedron");
  for (const auto& face : face_sets(oct)) {
    const std::vector<int> t(face.begin(), face.end());
    const auto d = corpus::random_decoration(F, oct.graph, rng);
    const auto c = triangle_deleted_monomial(F, oct, {t[0], t[1], t[2]}, d);
    for (int v : t) CHECK(c.monomial[v] == 0);
    CHECK(c.monomial.max_degree() <= 4);
    check_against_oracle(
        factors_without(F, oct.graph, d, {graphs::make_edge(t[0], t[1]), graphs::make_edge(t[0], t[2]),
                                          graphs::make_edge(t[1], t[2])}),
        c);
  }
  CHECK(code_of([&] { triangle_deleted_monomial(F, oct, {0, 1, 5}, Decoration::standard(oct.graph, F)); }) ==
        ErrorCode::NotATriangle);
}

TEST_CASE("triangle deletion on separating triangles") {
  corpus::Rng rng(4);
  int separating = 0;
  for (int i = 0; i < 60; ++i) {
    const Field& F = fields()[static_cast<std::size_t>(i % 3)];
    const int n = 5 + static_cast<int>(corpus::draw(rng, 5));
    const auto tri = corpus::random_triangulation(n, rng, static_cast<int>(corpus::draw(rng, 3)));
    const auto faces = face_sets(tri);
    const auto dec = corpus::random_decoration(F, tri.graph, rng);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) {
          if (!tri.graph.is_clique({a, b, c})) continue;
          const bool facial = faces.count({a, b, c}) > 0;
          separating += !facial;
          const auto cert = triangle_deleted_monomial(F, tri, {a, b, c}, dec);
          CHECK(cert.monomial[a] + cert.monomial[b] + cert.monomial[c] == 0);
          CHECK(cert.monomial.max_degree() <= 4);
          check_against_oracle(factors_without(F, tri.graph, dec,
                                               {graphs::make_edge(a, b), graphs::make_edge(a, c), graphs::make_edge(b, c)}),
                               cert);
          if (!facial) {
            const auto [left, right] = split_at_triangle(tri, {a, b, c});
            CHECK(left.tri.is_full_triangulation());
            CHECK(right.tri.is_full_triangulation());
            CHECK(left.tri.graph.order() + right.tri.graph.order() == n + 3);
            const auto again = triangle_deleted_monomial(F, tri, {a, b, c}, dec, std::make_pair(left, right));
            CHECK(again.monomial == cert.monomial);
          }
        }
  }
  CHECK(separating > 0);
}

TEST_CASE("V8 rooted monomials") {
  const Field Q = Field::rationals();
  const auto v8 = graphs::wagner_v8();
  const auto std_dec = Decoration::standard(v8, Q);
  for (const Edge e : {Edge{0, 1}, Edge{0, 4}, Edge{3, 7}}) {
    const auto cert = v8_rooted_monomial(Q, e, std_dec);
    CHECK(cert.monomial.total_degree() == 11);
    CHECK(cert.monomial[e.u] == 0);
    CHECK(cert.monomial[e.v] == 0);
    CHECK(cert.monomial.max_degree() <= 3);
    CHECK((cert.coefficient == Q.one() || cert.coefficient == Q.from_int(-1)));
    check_against_oracle(factors_without(Q, v8, std_dec, {e}), cert);
  }
  const Field F = Field::prime(7);
  corpus::Rng rng(8);
  for (int i = 0; i < 12; ++i) {
    const auto dec = corpus::random_decoration(F, v8, rng);
    const Edge e = v8.edges()[corpus::draw(rng, 12)];
    check_against_oracle(factors_without(F, v8, dec, {e}), v8_rooted_monomial(F, e, dec));
    const int root = static_cast<int>(corpus::draw(rng, 8));
    const auto vr = v8_vertex_rooted_monomial(F, root, dec);
    CHECK(vr.monomial[root] == 0);
    CHECK(vr.monomial.max_degree() <= 3);
    check_against_oracle(factors_without(F, v8, dec, {}), vr);
  }
  CHECK(code_of([&] { v8_rooted_monomial(Q, {0, 2}, std_dec); }) == ErrorCode::NotV8Edge);
}

TEST_CASE("clique-sum certificates") {
  const Field F = Field::prime(5);
  {
    graphs::CliqueSumTree tree;
    tree.leaves.push_back({graphs::CliqueSumLeaf::Kind::Triangulation, corpus::named_triangulation("k4")});
    const auto comp = graphs::compose(tree);
    const auto dec = Decoration::standard(comp.graph, F);
    const auto cert = clique_sum_monomial(F, tree, dec);
    CHECK(cert.monomial.max_degree() <= 4);
    CHECK(polys::an_number(polys::decorated_factors(F, comp.graph, dec)) <= cert.monomial.max_degree());
    check_against_oracle(polys::decorated_factors(F, comp.graph, dec), cert);
  }
  {
    // K4 glued to V8 on one edge: the V8 side contributes nothing at the glued vertices.
    graphs::CliqueSumTree tree;
    tree.leaves.push_back({graphs::CliqueSumLeaf::Kind::Triangulation, corpus::named_triangulation("k4")});
    tree.leaves.push_back({graphs::CliqueSumLeaf::Kind::V8, std::nullopt});
    tree.glues.push_back({1, {{0, 0}, {1, 1}}, {}});
    const auto comp = graphs::compose(tree);
    corpus::Rng rng(12);
    const auto dec = corpus::random_decoration(F, comp.graph, rng);
    const auto cert = clique_sum_monomial(F, tree, dec);
    CHECK(cert.monomial.max_degree() <= 4);
    const auto k4cert = clique_sum_monomial(
        F, graphs::CliqueSumTree{{tree.leaves[0]}, {}},
        [&] {
          Decoration d;
          const auto leaf = tree.leaves[0].graph();
          for (const auto& e : leaf.edges()) d.set(e, dec.at(e).a, dec.at(e).b);
          return d;
        }());
    CHECK(cert.monomial[0] == k4cert.monomial[0]);
    CHECK(cert.monomial[1] == k4cert.monomial[1]);
    check_against_oracle(polys::decorated_factors(F, comp.graph, dec), cert);
  }
  {
    graphs::CliqueSumTree tree;
    tree.leaves.push_back({graphs::CliqueSumLeaf::Kind::Triangulation, corpus::named_triangulation("k4")});
    tree.leaves.push_back({graphs::CliqueSumLeaf::Kind::Triangulation, corpus::named_triangulation("k4")});
    tree.glues.push_back({1, {{0, 0}, {1, 1}, {2, 2}, {3, 3}}, {}});
    CHECK(code_of([&] { graphs::compose(tree); }) == ErrorCode::MapTooLarge);
  }
}

TEST_CASE("random clique-sum trees") {
  corpus::Rng rng(55);
  for (int i = 0; i < 40; ++i) {
    const Field& F = fields()[static_cast<std::size_t>(i % 3)];
    const auto tree = corpus::random_clique_sum_tree(1 + static_cast<int>(corpus::draw(rng, 3)), rng, 6);
    const auto comp = graphs::compose(tree);
    const auto dec = corpus::random_decoration(F, comp.graph, rng);
    const auto cert = clique_sum_monomial(F, tree, dec);
    CHECK(cert.monomial.max_degree() <= 4);
    CHECK(polys::coeff_of_monomial(polys::decorated_factors(F, comp.graph, dec), cert.monomial) == cert.coefficient);
    if (comp.graph.size() <= 30) check_against_oracle(polys::decorated_factors(F, comp.graph, dec), cert);
  }
}

TEST_CASE("planar matchings") {
  const Field Q = Field::rationals();
  for (const char* name : {"k4", "c4"}) {
    const auto g = corpus::named_graph(name);
    const auto res = find_matching_at3(Q, g, Decoration::standard(g, Q));
    CHECK(res.matching.empty());
  }
  // K5 has an_number 4, so the search has to remove an edge.
  const auto k5 = corpus::named_graph("k5");
  const auto k5res = find_matching_at3(Q, k5, Decoration::standard(k5, Q));
  CHECK(k5res.matching == std::vector<Edge>{{0, 1}});
  check_against_oracle(factors_without(Q, k5, Decoration::standard(k5, Q), k5res.matching), k5res.certificate);
  const graphs::Graph empty(3);
  CHECK(find_matching_at3(Q, empty, Decoration::standard(empty, Q)).matching.empty());
  const graphs::Graph big(11);
  CHECK(code_of([&] { find_matching_at3(Q, big, Decoration::standard(big, Q)); }) ==
        ErrorCode::PreconditionViolated);

  corpus::Rng rng(77);
  const Field F = Field::prime(5);
  for (int i = 0; i < 30; ++i) {
    const int n = 4 + static_cast<int>(corpus::draw(rng, 5));
    const auto tri = corpus::random_triangulation(n, rng, n);
    const auto g = corpus::random_subgraph(tri.graph, 70 + static_cast<unsigned>(corpus::draw(rng, 31)), rng);
    const auto dec = corpus::random_decoration(F, g, rng);
    const auto res = find_matching_at3(F, g, dec);
    std::set<int> used;
    for (const auto& e : res.matching) {
      CHECK(g.has_edge(e.u, e.v));
      CHECK(used.insert(e.u).second);
      CHECK(used.insert(e.v).second);
    }
    CHECK(res.certificate.monomial.max_degree() <= 3);
    check_against_oracle(factors_without(F, g, dec, res.matching), res.certificate);
  }
}

TEST_CASE("verify_certificate rejects wrong coefficients") {
  const Field F = Field::prime(5);
  const auto nt = corpus::named_triangulation("k4");
  const auto dec = Decoration::standard(nt.graph, F);
  auto cert = nice_monomial(F, nt, 0, 2, dec);
  const auto target = factors_without(F, nt.graph, dec, {{0, 2}});
  verify_certificate(target, cert);
  cert.coefficient = F.add(cert.coefficient, F.one());
  CHECK(code_of([&] { verify_certificate(target, cert); }) == ErrorCode::InvariantViolation);
}
