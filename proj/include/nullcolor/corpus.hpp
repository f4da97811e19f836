#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nullcolor/algebra.hpp"
#include "nullcolor/graphs.hpp"
#include "nullcolor/polys.hpp"

/// Seeded instance generators. Everything is driven by mt19937_64 and plain
/// modular reduction, so a seed gives the same instance on every platform.
namespace nullcolor::corpus {

using Rng = std::mt19937_64;

/// Uniform-ish integer in [0, bound).
std::uint64_t draw(Rng& rng, std::uint64_t bound);

/// Plane triangulation on n >= 3 vertices: iterated insertion of a vertex into
/// a random face, then `flips` random edge flips. A random face is made outer.
graphs::NearTriangulation random_triangulation(int n, Rng& rng, int flips = 0);

/// Near-triangulation on n vertices whose outer face has `boundary` vertices
/// (3 <= boundary <= n): a randomly triangulated polygon (so chords are common)
/// with n - boundary interior vertices inserted, then random interior flips.
graphs::NearTriangulation random_near_triangulation(int n, int boundary, Rng& rng, int flips = 0);

/// Near-triangulation from the full face list of a plane graph, oriented
/// consistently (every edge traversed once in each direction; bounded faces
/// counter-clockwise), with faces[outer] designated as the outer face.
graphs::NearTriangulation from_faces(int n, const std::vector<std::vector<int>>& faces, std::size_t outer);

/// Uniform random graph with n vertices and m edges.
graphs::Graph random_graph(int n, int m, Rng& rng);

/// Random spanning subgraph keeping each edge with probability keep_percent/100.
graphs::Graph random_subgraph(const graphs::Graph& g, unsigned keep_percent, Rng& rng);

algebra::FieldElement random_element(const algebra::Field& field, Rng& rng);
algebra::FieldElement random_nonzero(const algebra::Field& field, Rng& rng);
polys::Decoration random_decoration(const algebra::Field& field, const graphs::Graph& g, Rng& rng);
polys::EdgeLabeling random_labeling(const algebra::Field& field, const graphs::Graph& g, Rng& rng);

/// Random linear clique-sum composition of `parts` leaves; roughly one leaf in
/// `v8_one_in` is V8. Glue sizes 1..3 where the cliques allow it, with random
/// drops of clique edges.
graphs::CliqueSumTree random_clique_sum_tree(int parts, Rng& rng, int max_leaf_order = 7, int v8_one_in = 3);

/// Named small graphs: k3, k4, k5, c4, c5, k23, k33, octahedron, v8, path3.
graphs::Graph named_graph(const std::string& name);
/// Named plane triangulations: k3, k4, octahedron.
graphs::NearTriangulation named_triangulation(const std::string& name);

}  // namespace nullcolor::corpus
