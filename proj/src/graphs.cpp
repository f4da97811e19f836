#include "nullcolor/graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "nullcolor/error.hpp"

namespace nullcolor::graphs {

namespace {

std::string edge_str(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

// Position of each neighbour inside each rotation.
std::vector<std::map<int, int>> rotation_positions(const PlaneEmbedding& emb) {
  std::vector<std::map<int, int>> pos(emb.rotations.size());
  for (std::size_t v = 0; v < emb.rotations.size(); ++v)
    for (std::size_t i = 0; i < emb.rotations[v].size(); ++i) pos[v][emb.rotations[v][i]] = static_cast<int>(i);
  return pos;
}

int count_components_with_edges(const Graph& g, std::vector<int>& comp) {
  comp.assign(static_cast<std::size_t>(g.order()), -1);
  int c = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : g.neighbors(x))
        if (comp[y] < 0) {
          comp[y] = c;
          stack.push_back(y);
        }
    }
    ++c;
  }
  return c;
}

}  // namespace

Edge make_edge(int a, int b) {
  if (a == b) throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw Error(ErrorCode::MalformedInput, "negative vertex count");
  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw Error(ErrorCode::UnknownVertex, "edge " + edge_str(e.u, e.v) + " outside 0.." + std::to_string(n - 1));
    e = make_edge(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw Error(ErrorCode::DuplicateEdge, "edge " + edge_str(edges[i].u, edges[i].v) + " repeated");
  edges_ = std::move(edges);
  adj_.assign(static_cast<std::size_t>(n), {});
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int a, int b) const {
  if (a < 0 || a >= n_ || b < 0 || b >= n_ || a == b) return false;
  const auto& na = adj_[a];
  return std::binary_search(na.begin(), na.end(), b);
}

std::optional<std::size_t> Graph::edge_index(int a, int b) const {
  if (a == b) return std::nullopt;
  const Edge e = make_edge(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

bool Graph::is_clique(const std::vector<int>& vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!has_edge(vertices[i], vertices[j])) return false;
  return true;
}

bool Graph::is_connected() const {
  std::vector<int> comp;
  return n_ == 0 || count_components_with_edges(*this, comp) == 1;
}

bool Graph::is_triangle_free() const {
  for (const auto& e : edges_)
    for (int w : adj_[e.u])
      if (w != e.v && has_edge(w, e.v)) return false;
  return true;
}

Graph Graph::induced(const std::vector<char>& keep) const {
  std::vector<Edge> kept;
  for (const auto& e : edges_)
    if (keep[e.u] && keep[e.v]) kept.push_back(e);
  return Graph(n_, std::move(kept));
}

Graph Graph::without_edges(const std::vector<Edge>& removed) const {
  std::set<Edge> gone;
  for (const auto& e : removed) gone.insert(make_edge(e.u, e.v));
  std::vector<Edge> kept;
  for (const auto& e : edges_)
    if (!gone.count(e)) kept.push_back(e);
  return Graph(n_, std::move(kept));
}

// ---------------------------------------------------------------------------

std::vector<std::vector<int>> trace_faces(const Graph& g, const PlaneEmbedding& emb) {
  const auto pos = rotation_positions(emb);
  std::set<std::pair<int, int>> seen;
  std::vector<std::vector<int>> faces;
  for (const auto& e : g.edges()) {
    for (auto [s, t] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (seen.count({s, t})) continue;
      std::vector<int> face;
      int a = s, b = t;
      while (!seen.count({a, b})) {
        seen.insert({a, b});
        face.push_back(a);
        const auto& rot = emb.rotations[b];
        const int i = pos[b].at(a);
        const int w = rot[(i + static_cast<int>(rot.size()) - 1) % static_cast<int>(rot.size())];
        a = b;
        b = w;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

void check_embedding(const Graph& g, const PlaneEmbedding& emb) {
  if (static_cast<int>(emb.rotations.size()) != g.order())
    throw Error(ErrorCode::InvalidEmbedding, "one rotation per vertex required");
  for (int v = 0; v < g.order(); ++v) {
    auto rot = emb.rotations[v];
    std::sort(rot.begin(), rot.end());
    if (rot != g.neighbors(v))
      throw Error(ErrorCode::InvalidEmbedding, "rotation at vertex " + std::to_string(v) + " does not list its edges once");
  }
  std::vector<int> comp;
  const int c = count_components_with_edges(g, comp);
  std::vector<long> verts(c, 0), edges(c, 0), faces(c, 0);
  for (int v = 0; v < g.order(); ++v) ++verts[comp[v]];
  for (const auto& e : g.edges()) ++edges[comp[e.u]];
  for (const auto& f : trace_faces(g, emb)) ++faces[comp[f.front()]];
  for (int i = 0; i < c; ++i) {
    if (edges[i] == 0) continue;
    if (verts[i] - edges[i] + faces[i] != 2)
      throw Error(ErrorCode::InvalidEmbedding, "Euler characteristic check failed (" + std::to_string(verts[i]) + " - " +
                                                   std::to_string(edges[i]) + " + " + std::to_string(faces[i]) + " != 2)");
  }
}

bool same_cycle(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const std::size_t n = a.size();
  for (int dir : {1, -1}) {
    for (std::size_t shift = 0; shift < n; ++shift) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        const std::size_t j = dir == 1 ? (shift + i) % n : (shift + n - i) % n;
        ok = a[i] == b[j];
      }
      if (ok) return true;
    }
  }
  return false;
}

bool is_two_connected(const Graph& g) {
  if (g.order() < 3 || !g.is_connected()) return false;
  for (int cut = 0; cut < g.order(); ++cut) {
    std::vector<char> keep(static_cast<std::size_t>(g.order()), 1);
    keep[cut] = 0;
    const int start = cut == 0 ? 1 : 0;
    std::vector<char> seen(keep.size(), 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : g.neighbors(x))
        if (keep[y] && !seen[y]) {
          seen[y] = 1;
          ++reached;
          stack.push_back(y);
        }
    }
    if (reached != g.order() - 1) return false;
  }
  return true;
}

NearTriangulation validate_near_triangulation(const Graph& g, const PlaneEmbedding& emb) {
  check_embedding(g, emb);
  if (!is_two_connected(g)) throw Error(ErrorCode::NotTwoConnected, "near-triangulations are 2-connected");

  const auto& outer = emb.outer_face;
  if (outer.size() < 3) throw Error(ErrorCode::OuterFaceNotCycle, "outer face needs at least 3 vertices");
  std::vector<char> on_boundary(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < outer.size(); ++i) {
    const int v = outer[i];
    if (v < 0 || v >= g.order()) throw Error(ErrorCode::OuterFaceNotCycle, "outer face names unknown vertex");
    if (on_boundary[v]) throw Error(ErrorCode::OuterFaceNotCycle, "outer face repeats vertex " + std::to_string(v));
    on_boundary[v] = 1;
    if (!g.has_edge(v, outer[(i + 1) % outer.size()]))
      throw Error(ErrorCode::OuterFaceNotCycle, "consecutive outer vertices are not adjacent");
  }

  bool outer_found = false;
  for (const auto& face : trace_faces(g, emb)) {
    if (!outer_found && same_cycle(face, outer)) {
      outer_found = true;
      continue;
    }
    if (face.size() != 3)
      throw Error(ErrorCode::NonTriangularInnerFace, "inner face of length " + std::to_string(face.size()));
  }
  if (!outer_found) throw Error(ErrorCode::OuterFaceNotCycle, "outer face is not a face of the embedding");

  NearTriangulation nt;
  nt.graph = g;
  nt.embedding = emb;
  nt.boundary = outer;
  nt.on_boundary = std::move(on_boundary);
  for (int v = 0; v < g.order(); ++v)
    if (!nt.on_boundary[v]) nt.interior.push_back(v);
  return nt;
}

NearTriangulation with_outer_face(const NearTriangulation& nt, const std::vector<int>& face) {
  PlaneEmbedding emb = nt.embedding;
  emb.outer_face = face;
  return validate_near_triangulation(nt.graph, emb);
}

// ---------------------------------------------------------------------------

GlueResult clique_sum_mapped(const Graph& left, const Graph& right, const IdentMap& ident,
                             const std::vector<Edge>& drop) {
  if (ident.size() > 3) throw Error(ErrorCode::MapTooLarge, "clique-sums are limited to cliques of size 3");
  if (ident.empty()) throw Error(ErrorCode::MalformedInput, "identification map is empty");
  std::vector<int> lv, rv;
  for (auto [l, r] : ident) {
    if (l < 0 || l >= left.order() || r < 0 || r >= right.order())
      throw Error(ErrorCode::UnknownVertex, "identification names unknown vertex");
    lv.push_back(l);
    rv.push_back(r);
  }
  auto distinct = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  if (!distinct(lv) || !distinct(rv)) throw Error(ErrorCode::MalformedInput, "identification map is not injective");
  if (!left.is_clique(lv)) throw Error(ErrorCode::NotAClique, "identified vertices are not a clique on the left");
  if (!right.is_clique(rv)) throw Error(ErrorCode::NotAClique, "identified vertices are not a clique on the right");

  std::vector<int> map(static_cast<std::size_t>(right.order()), -1);
  for (auto [l, r] : ident) map[r] = l;
  int next = left.order();
  for (auto& m : map)
    if (m < 0) m = next++;

  std::set<Edge> gone;
  for (const auto& d : drop) {
    const Edge e = make_edge(d.u, d.v);
    if (std::find(lv.begin(), lv.end(), e.u) == lv.end() || std::find(lv.begin(), lv.end(), e.v) == lv.end())
      throw Error(ErrorCode::DropOutsideClique, "dropped edge " + edge_str(e.u, e.v) + " is not a clique edge");
    gone.insert(e);
  }

  std::set<Edge> all(left.edges().begin(), left.edges().end());
  for (const auto& e : right.edges()) all.insert(make_edge(map[e.u], map[e.v]));
  std::vector<Edge> out;
  for (const auto& e : all)
    if (!gone.count(e)) out.push_back(e);
  return GlueResult{Graph(next, std::move(out)), std::move(map)};
}

Graph clique_sum(const Graph& left, const Graph& right, const IdentMap& ident, const std::vector<Edge>& drop) {
  return clique_sum_mapped(left, right, ident, drop).graph;
}

Graph wagner_v8() {
  std::vector<Edge> edges;
  for (int i = 0; i < 8; ++i) edges.push_back(make_edge(i, (i + 1) % 8));
  for (int i = 0; i < 4; ++i) edges.push_back(make_edge(i, i + 4));
  return Graph(8, std::move(edges));
}

Graph CliqueSumLeaf::graph() const {
  if (kind == Kind::V8) return wagner_v8();
  if (!triangulation) throw Error(ErrorCode::MalformedInput, "triangulation leaf without embedding");
  return triangulation->graph;
}

Composition compose(const CliqueSumTree& tree) {
  if (tree.leaves.empty()) throw Error(ErrorCode::MalformedInput, "clique-sum tree has no leaves");
  Composition out;
  out.graph = tree.leaves.front().graph();
  out.full_graph = out.graph;
  std::vector<int> identity(static_cast<std::size_t>(out.graph.order()));
  std::iota(identity.begin(), identity.end(), 0);
  out.vertex_maps.push_back(std::move(identity));
  for (const auto& step : tree.glues) {
    if (step.part >= tree.leaves.size()) throw Error(ErrorCode::MalformedInput, "glue names unknown leaf");
    const Graph part = tree.leaves[step.part].graph();
    auto glued = clique_sum_mapped(out.graph, part, step.ident, step.drop);
    auto full = clique_sum_mapped(out.full_graph, part, step.ident, {});
    out.graph = std::move(glued.graph);
    out.full_graph = std::move(full.graph);
    out.vertex_maps.push_back(std::move(glued.right_map));
    for (const auto& d : step.drop) out.dropped.push_back(make_edge(d.u, d.v));
  }
  return out;
}

// ---------------------------------------------------------------------------

DegeneracyResult degeneracy_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  DegeneracyResult res;
  int worst = -1;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
    worst = std::max(worst, deg[pick]);
    removed[pick] = 1;
    res.order.push_back(pick);
    for (int w : g.neighbors(pick))
      if (!removed[w]) --deg[w];
  }
  std::reverse(res.order.begin(), res.order.end());
  res.coloring_number = worst + 1;
  return res;
}

}  // namespace nullcolor::graphs
