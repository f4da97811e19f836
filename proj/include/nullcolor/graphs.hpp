#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace nullcolor::graphs {

/// Undirected edge stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Canonical edge; throws LoopEdge when a == b.
Edge make_edge(int a, int b);

/// Simple graph on vertices 0..n-1 with a sorted canonical edge list.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : Graph(n, {}) {}
  /// Throws LoopEdge, DuplicateEdge, UnknownVertex.
  Graph(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(int a, int b) const;
  std::optional<std::size_t> edge_index(int a, int b) const;
  bool is_clique(const std::vector<int>& vertices) const;
  bool is_connected() const;
  bool is_triangle_free() const;
  /// Subgraph induced on `keep` (vertex numbering unchanged; others isolated).
  Graph induced(const std::vector<char>& keep) const;
  Graph without_edges(const std::vector<Edge>& removed) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

/// Rotation system: `rotations[v]` lists the neighbours of v in counter-clockwise
/// order. `outer_face` is the boundary walk of the designated unbounded face.
///
/// Faces are traced by the rule next(u -> v) = (v -> w) where w precedes u in
/// the rotation at v; inner faces then come out counter-clockwise and the outer
/// face clockwise. The outer face may be given in either direction.
struct PlaneEmbedding {
  std::vector<std::vector<int>> rotations;
  std::vector<int> outer_face;
};

/// Each face as the sequence of dart tails in traversal order.
std::vector<std::vector<int>> trace_faces(const Graph& g, const PlaneEmbedding& emb);

/// Throws InvalidEmbedding unless every edge appears once in each endpoint's
/// rotation and every component with an edge satisfies n - m + f = 2.
void check_embedding(const Graph& g, const PlaneEmbedding& emb);

/// Same cyclic sequence up to rotation and reversal.
bool same_cycle(const std::vector<int>& a, const std::vector<int>& b);

bool is_two_connected(const Graph& g);

struct NearTriangulation {
  Graph graph;
  PlaneEmbedding embedding;
  std::vector<int> boundary;
  std::vector<int> interior;
  std::vector<char> on_boundary;

  bool is_full_triangulation() const noexcept { return boundary.size() == 3; }
};

/// Throws NotTwoConnected, OuterFaceNotCycle, NonTriangularInnerFace (and
/// InvalidEmbedding from the rotation check).
NearTriangulation validate_near_triangulation(const Graph& g, const PlaneEmbedding& emb);

/// Same triangulation with a different face designated as outer.
NearTriangulation with_outer_face(const NearTriangulation& nt, const std::vector<int>& face);

// ---------------------------------------------------------------------------
// Clique sums

/// Identification pairs (left vertex, right vertex).
using IdentMap = std::vector<std::pair<int, int>>;

struct GlueResult {
  Graph graph;
  /// right_map[r] is the index of right vertex r in the glued graph.
  std::vector<int> right_map;
};

/// Glue `right` onto `left` along the identified clique and delete `drop`
/// (edges named by left indices). Left keeps its numbering; unidentified right
/// vertices get fresh indices in ascending order.
/// Throws MapTooLarge, NotAClique, DropOutsideClique, MalformedInput.
GlueResult clique_sum_mapped(const Graph& left, const Graph& right, const IdentMap& ident,
                             const std::vector<Edge>& drop);
Graph clique_sum(const Graph& left, const Graph& right, const IdentMap& ident, const std::vector<Edge>& drop);

/// The 8-cycle plus the four antipodal chords {i, i+4}.
Graph wagner_v8();

struct CliqueSumLeaf {
  enum class Kind { Triangulation, V8 };
  Kind kind = Kind::V8;
  /// Present for triangulation leaves; must be a full triangulation.
  std::optional<NearTriangulation> triangulation;

  Graph graph() const;
};

/// Linear clique-sum composition: the running graph starts as leaves[0] and
/// each glue attaches leaves[part] to it. Dropped edges use running-graph indices.
struct GlueStep {
  std::size_t part = 0;
  IdentMap ident;
  std::vector<Edge> drop;
};

struct CliqueSumTree {
  std::vector<CliqueSumLeaf> leaves;
  std::vector<GlueStep> glues;
};

struct Composition {
  /// Final graph, dropped edges removed.
  Graph graph;
  /// Same composition with no edges dropped.
  Graph full_graph;
  /// Per glue: leaf vertex -> composite vertex. Entry 0 is the identity on leaves[0].
  std::vector<std::vector<int>> vertex_maps;
  /// All dropped edges, in composite indices.
  std::vector<Edge> dropped;
};

Composition compose(const CliqueSumTree& tree);

// ---------------------------------------------------------------------------

struct DegeneracyResult {
  std::vector<int> order;
  int coloring_number = 0;
};

/// Minimum-degree peeling (ties to the smallest index), reported reversed so
/// each vertex has at most col(G) - 1 earlier neighbours.
DegeneracyResult degeneracy_order(const Graph& g);

}  // namespace nullcolor::graphs
