#include "nullcolor/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "nullcolor/error.hpp"

namespace nullcolor::corpus {

using graphs::Edge;
using graphs::Graph;
using graphs::make_edge;
using graphs::NearTriangulation;

std::uint64_t draw(Rng& rng, std::uint64_t bound) { return bound == 0 ? 0 : rng() % bound; }

NearTriangulation from_faces(int n, const std::vector<std::vector<int>>& faces, std::size_t outer) {
  // Face (v0, ..., v_{k-1}) says that around v_i the neighbour after v_{i+1} is v_{i-1}.
  std::vector<std::map<int, int>> succ(static_cast<std::size_t>(n));
  std::vector<Edge> edges;
  for (const auto& f : faces) {
    const std::size_t k = f.size();
    for (std::size_t i = 0; i < k; ++i) {
      const int v = f[i], next = f[(i + 1) % k], prev = f[(i + k - 1) % k];
      succ[v][next] = prev;
      if (v < next) edges.push_back(Edge{v, next});
    }
  }
  graphs::PlaneEmbedding emb;
  emb.rotations.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    if (succ[v].empty()) continue;
    const int start = succ[v].begin()->first;
    int w = start;
    do {
      emb.rotations[v].push_back(w);
      w = succ[v].at(w);
    } while (w != start);
  }
  emb.outer_face = faces.at(outer);
  return graphs::validate_near_triangulation(Graph(n, std::move(edges)), emb);
}

namespace {

using Tri = std::array<int, 3>;

void insert_into_face(std::vector<Tri>& faces, std::size_t f, int w) {
  const auto [a, b, c] = faces[f];
  faces[f] = Tri{a, b, w};
  faces.push_back(Tri{b, c, w});
  faces.push_back(Tri{c, a, w});
}

// Flip the edge (a, b) of face f, if its twin exists among `faces` and the new
// diagonal is not already an edge.
void try_flip(std::vector<Tri>& faces, std::size_t f, int side) {
  const Tri ft = faces[f];
  const int a = ft[side], b = ft[(side + 1) % 3], c = ft[(side + 2) % 3];
  std::size_t g = faces.size();
  int d = -1;
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (int j = 0; j < 3; ++j)
      if (faces[i][j] == b && faces[i][(j + 1) % 3] == a) {
        g = i;
        d = faces[i][(j + 2) % 3];
      }
  if (g == faces.size() || c == d) return;
  for (const auto& t : faces)
    for (int j = 0; j < 3; ++j)
      if ((t[j] == c && t[(j + 1) % 3] == d) || (t[j] == d && t[(j + 1) % 3] == c)) return;
  faces[f] = Tri{c, a, d};
  faces[g] = Tri{d, b, c};
}

std::vector<std::vector<int>> as_lists(const std::vector<Tri>& faces) {
  std::vector<std::vector<int>> out;
  for (const auto& t : faces) out.push_back({t[0], t[1], t[2]});
  return out;
}

}  // namespace

NearTriangulation random_triangulation(int n, Rng& rng, int flips) {
  if (n < 3) throw Error(ErrorCode::MalformedInput, "a triangulation needs at least 3 vertices");
  std::vector<Tri> faces{Tri{0, 1, 2}, Tri{0, 2, 1}};
  for (int w = 3; w < n; ++w) insert_into_face(faces, draw(rng, faces.size()), w);
  for (int i = 0; i < flips; ++i) try_flip(faces, draw(rng, faces.size()), static_cast<int>(draw(rng, 3)));
  return from_faces(n, as_lists(faces), draw(rng, faces.size()));
}

NearTriangulation random_near_triangulation(int n, int boundary, Rng& rng, int flips) {
  if (boundary < 3 || boundary > n) throw Error(ErrorCode::MalformedInput, "boundary length must be in [3, n]");
  std::vector<Tri> faces;
  std::vector<int> polygon(static_cast<std::size_t>(boundary));
  std::iota(polygon.begin(), polygon.end(), 0);
  while (polygon.size() > 3) {
    const std::size_t k = polygon.size(), i = draw(rng, k);
    faces.push_back(Tri{polygon[(i + k - 1) % k], polygon[i], polygon[(i + 1) % k]});
    polygon.erase(polygon.begin() + static_cast<std::ptrdiff_t>(i));
  }
  faces.push_back(Tri{polygon[0], polygon[1], polygon[2]});
  for (int w = boundary; w < n; ++w) insert_into_face(faces, draw(rng, faces.size()), w);
  // Only inner faces are in the list, so boundary edges have no twin and never flip.
  for (int i = 0; i < flips; ++i) try_flip(faces, draw(rng, faces.size()), static_cast<int>(draw(rng, 3)));
  auto lists = as_lists(faces);
  std::vector<int> outer(static_cast<std::size_t>(boundary));
  for (int i = 0; i < boundary; ++i) outer[i] = boundary - 1 - i;
  lists.push_back(std::move(outer));
  return from_faces(n, lists, lists.size() - 1);
}

Graph random_graph(int n, int m, Rng& rng) {
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.push_back(Edge{u, v});
  const std::size_t take = std::min(all.size(), static_cast<std::size_t>(std::max(m, 0)));
  for (std::size_t i = 0; i < take; ++i) std::swap(all[i], all[i + draw(rng, all.size() - i)]);
  all.resize(take);
  return Graph(n, std::move(all));
}

Graph random_subgraph(const Graph& g, unsigned keep_percent, Rng& rng) {
  std::vector<Edge> kept;
  for (const auto& e : g.edges())
    if (draw(rng, 100) < keep_percent) kept.push_back(e);
  return Graph(g.order(), std::move(kept));
}

algebra::FieldElement random_element(const algebra::Field& field, Rng& rng) {
  if (field.is_finite()) return field.element(draw(rng, *field.size()));
  return field.from_int(static_cast<long long>(draw(rng, 11)) - 5);
}

algebra::FieldElement random_nonzero(const algebra::Field& field, Rng& rng) {
  if (field.is_finite()) return field.element(1 + draw(rng, *field.size() - 1));
  const long long v = static_cast<long long>(draw(rng, 10)) - 5;
  return field.from_int(v >= 0 ? v + 1 : v);
}

polys::Decoration random_decoration(const algebra::Field& field, const Graph& g, Rng& rng) {
  polys::Decoration d;
  for (const auto& e : g.edges()) {
    auto a = random_nonzero(field, rng);
    d.set(e, a, random_nonzero(field, rng));
  }
  return d;
}

polys::EdgeLabeling random_labeling(const algebra::Field& field, const Graph& g, Rng& rng) {
  polys::EdgeLabeling l;
  for (const auto& e : g.edges()) l.set(e, random_element(field, rng));
  return l;
}

namespace {

std::vector<std::vector<int>> cliques_of_size(const Graph& g, std::size_t s) {
  std::vector<std::vector<int>> out;
  const int n = g.order();
  if (s == 1)
    for (int v = 0; v < n; ++v) out.push_back({v});
  if (s == 2)
    for (const auto& e : g.edges()) out.push_back({e.u, e.v});
  if (s == 3)
    for (const auto& e : g.edges())
      for (int w : g.neighbors(e.v))
        if (w > e.v && g.has_edge(e.u, w)) out.push_back({e.u, e.v, w});
  return out;
}

graphs::CliqueSumLeaf random_leaf(Rng& rng, int max_leaf_order, int v8_one_in) {
  graphs::CliqueSumLeaf leaf;
  if (v8_one_in > 0 && draw(rng, static_cast<std::uint64_t>(v8_one_in)) == 0) {
    leaf.kind = graphs::CliqueSumLeaf::Kind::V8;
    return leaf;
  }
  leaf.kind = graphs::CliqueSumLeaf::Kind::Triangulation;
  const int n = 3 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(std::max(max_leaf_order - 2, 1))));
  leaf.triangulation = random_triangulation(n, rng, n);
  return leaf;
}

}  // namespace

graphs::CliqueSumTree random_clique_sum_tree(int parts, Rng& rng, int max_leaf_order, int v8_one_in) {
  graphs::CliqueSumTree tree;
  tree.leaves.push_back(random_leaf(rng, max_leaf_order, v8_one_in));
  Graph running = tree.leaves.front().graph();
  for (int p = 1; p < parts; ++p) {
    graphs::CliqueSumLeaf leaf = random_leaf(rng, max_leaf_order, v8_one_in);
    const Graph lg = leaf.graph();
    std::size_t s = 1 + draw(rng, leaf.kind == graphs::CliqueSumLeaf::Kind::V8 ? 2 : 3);
    std::vector<std::vector<int>> left, right;
    for (; s >= 1; --s) {
      left = cliques_of_size(running, s);
      right = cliques_of_size(lg, s);
      if (!left.empty() && !right.empty()) break;
    }
    auto lc = left[draw(rng, left.size())];
    auto rc = right[draw(rng, right.size())];
    for (std::size_t i = 0; i + 1 < rc.size(); ++i) std::swap(rc[i], rc[i + draw(rng, rc.size() - i)]);
    graphs::GlueStep step;
    step.part = tree.leaves.size();
    for (std::size_t i = 0; i < s; ++i) step.ident.emplace_back(lc[i], rc[i]);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = i + 1; j < s; ++j)
        if (draw(rng, 4) == 0) step.drop.push_back(make_edge(lc[i], lc[j]));
    running = graphs::clique_sum(running, lg, step.ident, step.drop);
    tree.leaves.push_back(std::move(leaf));
    tree.glues.push_back(std::move(step));
  }
  return tree;
}

Graph named_graph(const std::string& name) {
  auto complete = [](int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) e.push_back(Edge{u, v});
    return Graph(n, e);
  };
  auto cycle = [](int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, e);
  };
  if (name == "k3") return complete(3);
  if (name == "k4") return complete(4);
  if (name == "k5") return complete(5);
  if (name == "c4") return cycle(4);
  if (name == "c5") return cycle(5);
  if (name == "path3") return Graph(3, {Edge{0, 1}, Edge{1, 2}});
  if (name == "k23") return Graph(5, {Edge{0, 2}, Edge{0, 3}, Edge{0, 4}, Edge{1, 2}, Edge{1, 3}, Edge{1, 4}});
  if (name == "k33") {
    std::vector<Edge> e;
    for (int u = 0; u < 3; ++u)
      for (int v = 3; v < 6; ++v) e.push_back(Edge{u, v});
    return Graph(6, e);
  }
  if (name == "octahedron") return named_triangulation("octahedron").graph;
  if (name == "v8") return graphs::wagner_v8();
  throw Error(ErrorCode::MalformedInput, "unknown graph name '" + name + "'");
}

NearTriangulation named_triangulation(const std::string& name) {
  if (name == "k3") return from_faces(3, {{0, 1, 2}, {0, 2, 1}}, 1);
  if (name == "k4") return from_faces(4, {{0, 1, 3}, {1, 2, 3}, {2, 0, 3}, {0, 2, 1}}, 3);
  if (name == "octahedron")
    return from_faces(6,
                      {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}, {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}},
                      7);
  throw Error(ErrorCode::MalformedInput, "unknown triangulation name '" + name + "'");
}

}  // namespace nullcolor::corpus
