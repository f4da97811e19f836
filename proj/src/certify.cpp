#include "nullcolor/certify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "nullcolor/error.hpp"

namespace nullcolor::certify {

using graphs::make_edge;
using polys::FactorList;

std::string_view step_name(StepKind kind) noexcept {
  switch (kind) {
    case StepKind::Base: return "Base";
    case StepKind::Chord: return "Chord";
    case StepKind::BoundaryTriangle: return "BoundaryTriangle";
    case StepKind::SpecialMonomial: return "SpecialMonomial";
    case StepKind::NoSpecial: return "NoSpecial";
    case StepKind::TriangleDeletion: return "TriangleDeletion";
    case StepKind::V8: return "V8";
    case StepKind::CliqueGlue: return "CliqueGlue";
    case StepKind::EdgeDrop: return "EdgeDrop";
  }
  return "?";
}

void verify_certificate(const FactorList& target, const MonomialCertificate& cert) {
  const Field& field = target.field();
  if (field.is_zero(cert.coefficient)) throw Error(ErrorCode::InvariantViolation, "certificate coefficient is zero");
  const FieldElement recomputed = polys::coeff_of_monomial(target, cert.monomial);
  if (recomputed != cert.coefficient)
    throw Error(ErrorCode::InvariantViolation, "certificate coefficient " + field.to_string(cert.coefficient) +
                                                   " disagrees with recomputed " + field.to_string(recomputed));
}

FactorList factors_without(const Field& field, const Graph& g, const Decoration& dec,
                           const std::vector<Edge>& removed) {
  return polys::decorated_factors(field, g.without_edges(removed), dec);
}

namespace {

const FieldElement& coef(const Decoration& dec, int a, int b, int w) {
  return dec.coefficient_of(make_edge(a, b), w);
}

int index_of(const std::vector<int>& v, int x) {
  auto it = std::find(v.begin(), v.end(), x);
  return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

// Translate a monomial on a sub-structure's vertices into global numbering.
ExponentVector lift(const ExponentVector& local, const std::vector<int>& to_global, std::size_t n) {
  ExponentVector out(n);
  for (std::size_t i = 0; i < local.size(); ++i) out[to_global[i]] += local[i];
  return out;
}

std::vector<TraceStep> lift_trace(std::vector<TraceStep> trace, const std::vector<int>& to_global) {
  for (auto& step : trace)
    for (int& v : step.vertices) v = to_global[v];
  return trace;
}

// Decoration of a relabelled subgraph, read off the global one.
Decoration pull_back(const Decoration& dec, const std::vector<int>& to_global, const Graph& sub) {
  Decoration out;
  for (const auto& e : sub.edges()) {
    const int gu = to_global[e.u], gv = to_global[e.v];
    const auto& entry = dec.at(make_edge(gu, gv));
    if (gu < gv)
      out.set(e, entry.a, entry.b);
    else
      out.set(e, entry.b, entry.a);
  }
  return out;
}

struct Partial {
  ExponentVector monomial;
  FieldElement coefficient;
};

// The inductive construction of a nice monomial. A region is an induced
// sub-near-triangulation of the input, given by a vertex mask and its boundary
// cycle; all vertex ids stay global.
class NiceBuilder {
 public:
  NiceBuilder(const Field& field, const NearTriangulation& nt, const Decoration& dec, std::size_t budget)
      : field_(field), nt_(nt), dec_(dec), budget_(budget), n_(static_cast<std::size_t>(nt.graph.order())) {}

  std::vector<TraceStep> trace;

  Partial solve(const std::vector<char>& region, const std::vector<int>& boundary, int x, int y) {
    const std::size_t count = static_cast<std::size_t>(std::count(region.begin(), region.end(), 1));
    const std::size_t L = boundary.size();
    const Graph& g = nt_.graph;

    if (count == 3) {
      const int v = boundary[0] != x && boundary[0] != y ? boundary[0] : boundary[1] != x && boundary[1] != y
                                                                             ? boundary[1]
                                                                             : boundary[2];
      trace.push_back({StepKind::Base, {x, y, v}});
      ExponentVector m(n_);
      m[v] = 2;
      return {m, field_.mul(coef(dec_, x, v, v), coef(dec_, y, v, v))};
    }

    // Case 1: the lexicographically first chord of the boundary cycle.
    std::optional<Edge> chord;
    for (std::size_t i = 0; i < L; ++i)
      for (std::size_t j = i + 2; j < L; ++j) {
        if (i == 0 && j == L - 1) continue;
        if (!g.has_edge(boundary[i], boundary[j])) continue;
        const Edge c = make_edge(boundary[i], boundary[j]);
        if (!chord || c < *chord) chord = c;
      }
    if (chord) return split_at_chord(region, boundary, x, y, chord->u, chord->v);

    // Case 2: remove the boundary neighbour v of y other than x.
    const int iy = index_of(boundary, y);
    const int prev = boundary[(iy + L - 1) % L], next = boundary[(iy + 1) % L];
    const int v = prev == x ? next : prev;
    const int iv = index_of(boundary, v);
    const int before_v = boundary[(iv + L - 1) % L], after_v = boundary[(iv + 1) % L];
    const int t = before_v == y ? after_v : before_v;

    // Interior neighbours of v in rotation order starting next to y.
    std::vector<int> rot;
    for (int w : nt_.embedding.rotations[v])
      if (region[w]) rot.push_back(w);
    const int d = static_cast<int>(rot.size());
    const int ry = index_of(rot, y);
    const int step = rot[(ry + 1) % d] == t ? -1 : 1;
    std::vector<int> xs;
    for (int i = (ry + step + d) % d; rot[i] != t; i = (i + step + d) % d) xs.push_back(rot[i]);

    std::vector<char> sub_region = region;
    sub_region[v] = 0;
    std::vector<int> sub_boundary;
    for (std::size_t i = 0; i < L; ++i) {
      if (boundary[i] != v) {
        sub_boundary.push_back(boundary[i]);
        continue;
      }
      // Walking the cycle we arrive at v from before_v and leave toward after_v.
      if (before_v == y)
        sub_boundary.insert(sub_boundary.end(), xs.begin(), xs.end());
      else
        sub_boundary.insert(sub_boundary.end(), xs.rbegin(), xs.rend());
    }

    FieldElement q_xi = field_.one();
    ExponentVector xs_mono(n_);
    for (int xi : xs) {
      q_xi = field_.mul(q_xi, coef(dec_, v, xi, xi));
      xs_mono[xi] = 1;
    }
    std::vector<int> tagged{v, t};
    tagged.insert(tagged.end(), xs.begin(), xs.end());

    if (t == x) {
      trace.push_back({StepKind::BoundaryTriangle, tagged});
      Partial inner = solve(sub_region, sub_boundary, x, y);
      ExponentVector nm = xs_mono;
      nm[v] = 2;
      FieldElement c = field_.mul(coef(dec_, v, x, v), coef(dec_, v, y, v));
      return {inner.monomial * nm, field_.mul(inner.coefficient, field_.mul(c, q_xi))};
    }

    if (auto special = find_special(sub_region, sub_boundary, x, y, t, xs)) {
      trace.push_back({StepKind::SpecialMonomial, tagged});
      ExponentVector nm = xs_mono;
      nm[v] = 1;
      nm[t] = 1;
      FieldElement c = field_.mul(coef(dec_, v, y, v), coef(dec_, v, t, t));
      return {special->monomial * nm, field_.mul(special->coefficient, field_.mul(c, q_xi))};
    }

    trace.push_back({StepKind::NoSpecial, tagged});
    Partial inner = solve(sub_region, sub_boundary, x, y);
    ExponentVector nm = xs_mono;
    nm[v] = 2;
    FieldElement c = field_.mul(coef(dec_, v, y, v), coef(dec_, v, t, v));
    return {inner.monomial * nm, field_.mul(inner.coefficient, field_.mul(c, q_xi))};
  }

 private:
  Partial split_at_chord(const std::vector<char>& region, const std::vector<int>& boundary, int x, int y, int w,
                         int z) {
    trace.push_back({StepKind::Chord, {w, z}});
    const std::size_t L = boundary.size();
    const std::size_t iw = static_cast<std::size_t>(index_of(boundary, w));
    std::vector<int> arc1, arc2;  // w..z and z..w along the cycle
    std::size_t i = iw;
    while (boundary[i] != z) {
      arc1.push_back(boundary[i]);
      i = (i + 1) % L;
    }
    arc1.push_back(z);
    while (boundary[i] != w) {
      arc2.push_back(boundary[i]);
      i = (i + 1) % L;
    }
    arc2.push_back(w);

    auto has_edge_on = [](const std::vector<int>& arc, int a, int b) {
      for (std::size_t k = 0; k + 1 < arc.size(); ++k)
        if ((arc[k] == a && arc[k + 1] == b) || (arc[k] == b && arc[k + 1] == a)) return true;
      return false;
    };
    const bool e_in_first = has_edge_on(arc1, x, y);
    const auto& arc_e = e_in_first ? arc1 : arc2;
    const auto& arc_f = e_in_first ? arc2 : arc1;

    Partial m1 = solve(side(region, arc_e, w, z), arc_e, x, y);
    Partial m2 = solve(side(region, arc_f, w, z), arc_f, w, z);
    return {m1.monomial * m2.monomial, field_.mul(m1.coefficient, m2.coefficient)};
  }

  // Vertices of the arc plus everything reachable from its inner vertices
  // without passing through the chord ends.
  std::vector<char> side(const std::vector<char>& region, const std::vector<int>& arc, int w, int z) const {
    std::vector<char> out(n_, 0);
    std::vector<int> stack;
    for (int a : arc) {
      out[a] = 1;
      if (a != w && a != z) stack.push_back(a);
    }
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (int b : nt_.graph.neighbors(a))
        if (region[b] && !out[b]) {
          out[b] = 1;
          stack.push_back(b);
        }
    }
    return out;
  }

  std::optional<Partial> find_special(const std::vector<char>& region, const std::vector<int>& boundary, int x, int y,
                                      int t, const std::vector<int>& xs) const {
    const Graph& g = nt_.graph;
    const Edge e = make_edge(x, y);
    FactorList f(field_, static_cast<int>(n_));
    for (const auto& ed : g.edges()) {
      if (!region[ed.u] || !region[ed.v] || ed == e) continue;
      const auto& entry = dec_.at(ed);
      f.add(polys::AffineFactor{ed.u, entry.a, ed.v, entry.b, field_.zero()});
    }
    std::vector<unsigned> caps(n_, 0);
    for (std::size_t w = 0; w < n_; ++w)
      if (region[w]) caps[w] = 4;
    for (int b : boundary) caps[b] = 2;
    for (int xi : xs) caps[xi] = 3;
    caps[t] = 1;
    caps[x] = 0;
    caps[y] = 0;
    const auto poly = polys::expand_capped(f, caps, budget_);
    for (const auto& [m, c] : poly.terms()) {
      int loosened = 0;
      for (int xi : xs)
        if (m[xi] == 3) ++loosened;
      if (loosened <= 1) return Partial{m, c};
    }
    return std::nullopt;
  }

  const Field& field_;
  const NearTriangulation& nt_;
  const Decoration& dec_;
  std::size_t budget_;
  std::size_t n_;
};

bool on_boundary_edge(const std::vector<int>& boundary, int x, int y) {
  const std::size_t L = boundary.size();
  for (std::size_t i = 0; i < L; ++i) {
    const int a = boundary[i], b = boundary[(i + 1) % L];
    if ((a == x && b == y) || (a == y && b == x)) return true;
  }
  return false;
}

// A traced face containing the edge ab, or containing a when b < 0.
std::vector<int> face_through(const NearTriangulation& nt, int a, int b) {
  for (const auto& face : graphs::trace_faces(nt.graph, nt.embedding)) {
    if (b < 0) {
      if (index_of(face, a) >= 0) return face;
      continue;
    }
    if (on_boundary_edge(face, a, b)) return face;
  }
  throw Error(ErrorCode::InvariantViolation, "no face through the requested vertices");
}

SubTriangulation extract(const NearTriangulation& tri, const std::vector<char>& keep,
                         const std::array<int, 3>& outer) {
  SubTriangulation sub;
  std::vector<int> local(keep.size(), -1);
  for (std::size_t v = 0; v < keep.size(); ++v)
    if (keep[v]) {
      local[v] = static_cast<int>(sub.to_global.size());
      sub.to_global.push_back(static_cast<int>(v));
    }
  std::vector<Edge> edges;
  for (const auto& e : tri.graph.edges())
    if (keep[e.u] && keep[e.v]) edges.push_back(make_edge(local[e.u], local[e.v]));
  graphs::PlaneEmbedding emb;
  for (int gv : sub.to_global) {
    std::vector<int> rot;
    for (int w : tri.embedding.rotations[gv])
      if (keep[w]) rot.push_back(local[w]);
    emb.rotations.push_back(std::move(rot));
  }
  for (int v : outer) emb.outer_face.push_back(local[v]);
  Graph g(static_cast<int>(sub.to_global.size()), std::move(edges));
  try {
    sub.tri = graphs::validate_near_triangulation(g, emb);
  } catch (const Error& err) {
    throw Error(ErrorCode::MissingSplit, std::string("side of the triangle is not a triangulation: ") + err.what());
  }
  return sub;
}

void require_triangle(const Graph& g, const std::array<int, 3>& t) {
  for (int v : t)
    if (v < 0 || v >= g.order()) throw Error(ErrorCode::NotATriangle, "triangle vertex out of range");
  if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2] || !g.has_edge(t[0], t[1]) || !g.has_edge(t[1], t[2]) ||
      !g.has_edge(t[0], t[2]))
    throw Error(ErrorCode::NotATriangle, "vertices are not pairwise adjacent");
}

std::vector<Edge> triangle_edges(const std::array<int, 3>& t) {
  return {make_edge(t[0], t[1]), make_edge(t[1], t[2]), make_edge(t[0], t[2])};
}

MonomialCertificate facial_triangle_monomial(const Field& field, const NearTriangulation& tri,
                                             const std::array<int, 3>& t, const Decoration& dec, std::size_t budget) {
  std::array<int, 3> s = t;
  std::sort(s.begin(), s.end());
  const int x = s[0], y = s[1], v = s[2];
  const NearTriangulation outer = graphs::same_cycle(tri.boundary, {x, y, v}) ? tri
                                                                               : graphs::with_outer_face(tri, {x, y, v});
  MonomialCertificate cert = nice_monomial(field, outer, x, y, dec, budget);
  if (cert.monomial[v] != 2)
    throw Error(ErrorCode::InvariantViolation, "nice monomial does not pick the apex twice");
  cert.monomial[v] = 0;
  const FieldElement picked = field.mul(coef(dec, x, v, v), coef(dec, y, v, v));
  cert.coefficient = field.mul(cert.coefficient, field.inv(picked));
  cert.trace.insert(cert.trace.begin(), TraceStep{StepKind::TriangleDeletion, {x, y, v}});
  return cert;
}

}  // namespace

MonomialCertificate nice_monomial(const Field& field, const NearTriangulation& nt, int x, int y,
                                  const Decoration& dec, std::size_t budget) {
  if (!on_boundary_edge(nt.boundary, x, y))
    throw Error(ErrorCode::NotBoundaryEdge,
                "(" + std::to_string(x) + "," + std::to_string(y) + ") is not an edge of the boundary cycle");
  const Edge e = make_edge(x, y);
  const FactorList target = factors_without(field, nt.graph, dec, {e});

  NiceBuilder builder(field, nt, dec, budget);
  std::vector<char> region(static_cast<std::size_t>(nt.graph.order()), 1);
  Partial p = builder.solve(region, nt.boundary, x, y);
  MonomialCertificate cert{std::move(p.monomial), std::move(p.coefficient), std::move(builder.trace)};

  if (cert.monomial[x] != 0 || cert.monomial[y] != 0)
    throw Error(ErrorCode::InvariantViolation, "nice monomial uses an endpoint of e");
  for (int w = 0; w < nt.graph.order(); ++w)
    if (cert.monomial[w] > (nt.on_boundary[w] ? 2u : 4u))
      throw Error(ErrorCode::InvariantViolation, "nice monomial exceeds its degree bound at " + std::to_string(w));
  verify_certificate(target, cert);
  return cert;
}

std::pair<SubTriangulation, SubTriangulation> split_at_triangle(const NearTriangulation& tri,
                                                                const std::array<int, 3>& triangle) {
  require_triangle(tri.graph, triangle);
  const std::size_t n = static_cast<std::size_t>(tri.graph.order());
  std::vector<int> comp(n, -1);
  for (int v : triangle) comp[v] = -2;
  int comps = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{static_cast<int>(s)};
    comp[s] = comps;
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (int b : tri.graph.neighbors(a))
        if (comp[b] == -1) {
          comp[b] = comps;
          stack.push_back(b);
        }
    }
    ++comps;
  }
  if (comps != 2) throw Error(ErrorCode::MissingSplit, "triangle does not separate the graph into two sides");
  auto side = [&](int c) {
    std::vector<char> keep(n, 0);
    for (std::size_t v = 0; v < n; ++v) keep[v] = comp[v] == c || comp[v] == -2;
    return extract(tri, keep, triangle);
  };
  return {side(0), side(1)};
}

MonomialCertificate triangle_deleted_monomial(const Field& field, const NearTriangulation& tri,
                                              const std::array<int, 3>& triangle, const Decoration& dec,
                                              const std::optional<std::pair<SubTriangulation, SubTriangulation>>& split,
                                              std::size_t budget) {
  require_triangle(tri.graph, triangle);
  if (!tri.is_full_triangulation())
    throw Error(ErrorCode::MalformedInput, "triangle deletion needs a full triangulation");
  const FactorList target = factors_without(field, tri.graph, dec, triangle_edges(triangle));

  bool facial = false;
  for (const auto& face : graphs::trace_faces(tri.graph, tri.embedding))
    if (face.size() == 3 && graphs::same_cycle(face, {triangle[0], triangle[1], triangle[2]})) facial = true;

  MonomialCertificate cert;
  if (facial) {
    cert = facial_triangle_monomial(field, tri, triangle, dec, budget);
  } else {
    const auto parts = split ? *split : split_at_triangle(tri, triangle);
    const std::size_t n = static_cast<std::size_t>(tri.graph.order());
    cert.monomial = ExponentVector(n);
    cert.coefficient = field.one();
    cert.trace.push_back({StepKind::TriangleDeletion, {triangle[0], triangle[1], triangle[2]}});
    for (const SubTriangulation* sub : {&parts.first, &parts.second}) {
      std::vector<int> global_to_local(n, -1);
      for (std::size_t i = 0; i < sub->to_global.size(); ++i)
        global_to_local.at(static_cast<std::size_t>(sub->to_global[i])) = static_cast<int>(i);
      std::array<int, 3> local_t{};
      for (int i = 0; i < 3; ++i) {
        local_t[i] = global_to_local[triangle[i]];
        if (local_t[i] < 0) throw Error(ErrorCode::MissingSplit, "supplied side does not contain the triangle");
      }
      const Decoration sub_dec = pull_back(dec, sub->to_global, sub->tri.graph);
      MonomialCertificate part = facial_triangle_monomial(field, sub->tri, local_t, sub_dec, budget);
      cert.monomial = cert.monomial * lift(part.monomial, sub->to_global, n);
      cert.coefficient = field.mul(cert.coefficient, part.coefficient);
      auto lifted = lift_trace(std::move(part.trace), sub->to_global);
      cert.trace.insert(cert.trace.end(), lifted.begin(), lifted.end());
    }
  }
  for (int v : triangle)
    if (cert.monomial[v] != 0) throw Error(ErrorCode::InvariantViolation, "triangle vertex has positive degree");
  if (cert.monomial.max_degree() > 4) throw Error(ErrorCode::InvariantViolation, "degree above 4");
  verify_certificate(target, cert);
  return cert;
}

namespace {

MonomialCertificate v8_search(const Field& field, const Graph& g, const Decoration& dec, const std::vector<int>& roots,
                              std::vector<int> tag) {
  const std::uint64_t total = std::uint64_t{1} << g.size();
  for (std::uint64_t code = 0; code < total; ++code) {
    const auto o = polys::Orientation::from_code(g, code);
    const auto indeg = o.in_degrees(g);
    if (std::any_of(roots.begin(), roots.end(), [&](int r) { return indeg[r] != 0; })) continue;
    if (*std::max_element(indeg.begin(), indeg.end()) > 3) continue;
    if (!o.is_acyclic(g)) continue;
    MonomialCertificate cert{ExponentVector(indeg), polys::orientation_weight(field, g, dec, o),
                             {TraceStep{StepKind::V8, std::move(tag)}}};
    verify_certificate(polys::decorated_factors(field, g, dec), cert);
    return cert;
  }
  throw Error(ErrorCode::SearchExhausted, "no acyclic orientation of V8 meets the root constraints");
}

}  // namespace

MonomialCertificate v8_rooted_monomial(const Field& field, Edge e, const Decoration& dec) {
  const Graph v8 = graphs::wagner_v8();
  if (e.u < 0 || e.v < 0 || e.u >= 8 || e.v >= 8 || e.u == e.v || !v8.has_edge(e.u, e.v))
    throw Error(ErrorCode::NotV8Edge, "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge of V8");
  e = make_edge(e.u, e.v);
  return v8_search(field, v8.without_edges({e}), dec, {e.u, e.v}, {e.u, e.v});
}

MonomialCertificate v8_vertex_rooted_monomial(const Field& field, int root, const Decoration& dec) {
  if (root < 0 || root >= 8) throw Error(ErrorCode::UnknownVertex, "V8 has vertices 0..7");
  return v8_search(field, graphs::wagner_v8(), dec, {root}, {root});
}

// ---------------------------------------------------------------------------

namespace {

using graphs::CliqueSumLeaf;

// Nice monomial for a boundary edge xy of some face through x (and y), times
// `extra` copies of the x or y variable.
MonomialCertificate rooted_triangulation(const Field& field, const NearTriangulation& tri, int x, int y,
                                         const Decoration& dec, std::size_t budget) {
  const NearTriangulation outer = on_boundary_edge(tri.boundary, x, y)
                                      ? tri
                                      : graphs::with_outer_face(tri, face_through(tri, x, y));
  return nice_monomial(field, outer, x, y, dec, budget);
}

// Certificate for the root of the composition, on D_F of the whole leaf.
MonomialCertificate root_certificate(const Field& field, const CliqueSumLeaf& leaf, const Decoration& dec,
                                     std::size_t budget) {
  if (leaf.kind == CliqueSumLeaf::Kind::V8) return v8_vertex_rooted_monomial(field, 0, dec);
  const auto& tri = *leaf.triangulation;
  const int x = tri.boundary[0], y = tri.boundary[1];
  MonomialCertificate cert = nice_monomial(field, tri, x, y, dec, budget);
  cert.monomial[x] += 1;
  cert.coefficient = field.mul(cert.coefficient, coef(dec, x, y, x));
  return cert;
}

// Certificate for the part glued on `clique` (leaf ids): a monomial of the
// factors the part contributes to the glued graph, zero on the clique.
MonomialCertificate part_certificate(const Field& field, const CliqueSumLeaf& leaf, const std::vector<int>& clique,
                                     const Decoration& dec, std::size_t budget) {
  if (leaf.kind == CliqueSumLeaf::Kind::V8) {
    if (clique.size() == 1) return v8_vertex_rooted_monomial(field, clique[0], dec);
    if (clique.size() == 2) return v8_rooted_monomial(field, make_edge(clique[0], clique[1]), dec);
    throw Error(ErrorCode::NotAClique, "V8 has no triangles");
  }
  const auto& tri = *leaf.triangulation;
  if (clique.size() == 3) return triangle_deleted_monomial(field, tri, {clique[0], clique[1], clique[2]}, dec);
  if (clique.size() == 2) return rooted_triangulation(field, tri, clique[0], clique[1], dec, budget);
  // Single vertex: M for the edge xy of a face through x, then M*y on the whole leaf.
  const int x = clique[0];
  const auto face = face_through(tri, x, -1);
  const int y = face[(static_cast<std::size_t>(index_of(face, x)) + 1) % face.size()];
  MonomialCertificate cert = rooted_triangulation(field, tri, x, y, dec, budget);
  cert.monomial[y] += 1;
  cert.coefficient = field.mul(cert.coefficient, coef(dec, x, y, y));
  return cert;
}

}  // namespace

MonomialCertificate clique_sum_monomial(const Field& field, const graphs::CliqueSumTree& tree, const Decoration& dec,
                                        std::size_t budget) {
  const graphs::Composition comp = graphs::compose(tree);
  for (const auto& leaf : tree.leaves)
    if (leaf.kind == CliqueSumLeaf::Kind::Triangulation && (!leaf.triangulation || !leaf.triangulation->is_full_triangulation()))
      throw Error(ErrorCode::MalformedInput, "triangulation leaves must be full triangulations");

  const std::size_t n = static_cast<std::size_t>(comp.full_graph.order());
  Decoration full_dec;
  for (const auto& e : comp.full_graph.edges()) {
    if (dec.contains(e))
      full_dec.set(e, dec.at(e).a, dec.at(e).b);
    else if (!comp.graph.has_edge(e.u, e.v))
      full_dec.set(e, field.one(), field.from_int(-1));
    else
      dec.at(e);  // throws MissingEdge
  }

  const auto leaf_dec = [&](std::size_t glue_index, const Graph& leaf_graph) {
    return pull_back(full_dec, comp.vertex_maps[glue_index], leaf_graph);
  };

  MonomialCertificate cert;
  {
    const auto& leaf = tree.leaves.front();
    const Graph lg = leaf.graph();
    MonomialCertificate root = root_certificate(field, leaf, leaf_dec(0, lg), budget);
    cert.monomial = lift(root.monomial, comp.vertex_maps[0], n);
    cert.coefficient = root.coefficient;
    cert.trace = lift_trace(std::move(root.trace), comp.vertex_maps[0]);
  }

  for (std::size_t i = 0; i < tree.glues.size(); ++i) {
    const auto& step = tree.glues[i];
    const auto& leaf = tree.leaves[step.part];
    const auto& map = comp.vertex_maps[i + 1];
    std::vector<int> clique, glued;
    for (auto [l, r] : step.ident) {
      clique.push_back(r);
      glued.push_back(map[r]);
    }
    const Graph lg = leaf.graph();
    MonomialCertificate part = part_certificate(field, leaf, clique, leaf_dec(i + 1, lg), budget);
    for (int r : clique)
      if (part.monomial[r] != 0) throw Error(ErrorCode::InvariantViolation, "part certificate uses a glued vertex");
    cert.monomial = cert.monomial * lift(part.monomial, map, n);
    cert.coefficient = field.mul(cert.coefficient, part.coefficient);
    cert.trace.push_back({StepKind::CliqueGlue, glued});
    auto lifted = lift_trace(std::move(part.trace), map);
    cert.trace.insert(cert.trace.end(), lifted.begin(), lifted.end());
  }

  // Deleting an edge uv: c_M(D_G) = a c_{M/x_u}(D_{G-e}) + b c_{M/x_v}(D_{G-e}),
  // so one of the two quotients survives.
  Graph current = comp.full_graph;
  for (const auto& e : comp.dropped) {
    if (!current.has_edge(e.u, e.v))
      throw Error(ErrorCode::GlueMismatch, "dropped edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                               ") is not present in the composition");
    current = current.without_edges({e});
    const FactorList f = polys::decorated_factors(field, current, full_dec);
    bool done = false;
    for (int w : {e.u, e.v}) {
      if (cert.monomial[w] == 0) continue;
      ExponentVector m = cert.monomial;
      m[w] -= 1;
      FieldElement c = polys::coeff_of_monomial(f, m);
      if (field.is_zero(c)) continue;
      cert.monomial = std::move(m);
      cert.coefficient = std::move(c);
      cert.trace.push_back({StepKind::EdgeDrop, {e.u, e.v, w}});
      done = true;
      break;
    }
    if (!done) throw Error(ErrorCode::InvariantViolation, "both quotients vanish after deleting an edge");
  }

  if (cert.monomial.max_degree() > 4) throw Error(ErrorCode::InvariantViolation, "composed certificate exceeds degree 4");
  verify_certificate(polys::decorated_factors(field, comp.graph, dec), cert);
  return cert;
}

// ---------------------------------------------------------------------------

MatchingCertificate find_matching_at3(const Field& field, const Graph& g, const Decoration& dec, int max_order,
                                      std::size_t budget) {
  if (g.order() > max_order)
    throw Error(ErrorCode::PreconditionViolated,
                "matching search is limited to " + std::to_string(max_order) + " vertices");
  polys::decorated_factors(field, g, dec);
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  for (std::size_t size = 0; 2 * size <= static_cast<std::size_t>(g.order()) && size <= m; ++size) {
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
      std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
      bool matching = true;
      std::vector<Edge> chosen;
      for (auto i : pick) {
        const Edge& e = edges[i];
        if (used[e.u] || used[e.v]) {
          matching = false;
          break;
        }
        used[e.u] = used[e.v] = 1;
        chosen.push_back(e);
      }
      if (matching) {
        const FactorList f = factors_without(field, g, dec, chosen);
        const auto poly = polys::expand_capped(f, std::optional<unsigned>(3), budget);
        if (!poly.empty()) {
          const auto& [mono, c] = *poly.terms().begin();
          MonomialCertificate cert{mono, c, {}};
          verify_certificate(f, cert);
          return {std::move(chosen), std::move(cert)};
        }
      }
      // Next combination in lexicographic order.
      std::size_t k = size;
      while (k > 0 && pick[k - 1] == m - size + k - 1) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t j = k; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw Error(ErrorCode::SearchExhausted, "no matching S with an_number(D_{G-S}) <= 3");
}

}  // namespace nullcolor::certify
