#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "nullcolor/algebra.hpp"
#include "nullcolor/certify.hpp"
#include "nullcolor/coloring.hpp"
#include "nullcolor/graphs.hpp"
#include "nullcolor/polys.hpp"

/// JSON encodings of the library's inputs and outputs.
///
/// Field elements are written as strings: "3" in a prime field, "[c0,c1,...]"
/// (constant coefficient first) in an extension field, "p/q" in the rationals.
/// On input, integers, coefficient arrays and those strings are accepted.
namespace nullcolor::io {

using json = nlohmann::json;

/// "p", "p,k", or "Q" / "0" for the rationals. Throws MalformedInput.
algebra::FieldSpec parse_field_spec(const std::string& text);
/// Same grammar from JSON: a string, a number, or {"p": p, "k": k, "modulus": [...]}.
algebra::FieldSpec field_spec_from_json(const json& j);
json field_to_json(const algebra::Field& field);

json element_to_json(const algebra::Field& field, const algebra::FieldElement& e);
/// Throws MalformedInput, FieldMismatch.
algebra::FieldElement element_from_json(const algebra::Field& field, const json& j);

/// Graph document:
///   {"n": 4, "edges": [[0,1], {"u":1,"v":2,"a":1,"b":-1,"label":0}, ...],
///    "field": "5", "embedding": {"rotations": [[...], ...], "outer_face": [...]}}
/// An edge is oriented in the order it is listed; a and b refer to the listed
/// order as well. Missing decorations default to (1, -1), missing labels to 0.
struct GraphDocument {
  graphs::Graph graph;
  std::optional<algebra::FieldSpec> field;
  std::optional<graphs::PlaneEmbedding> embedding;
  polys::Orientation orientation;

  polys::Decoration decoration(const algebra::Field& field) const;
  polys::EdgeLabeling labeling(const algebra::Field& field) const;
  /// Group labels (non-negative integers) in canonical edge order.
  std::vector<std::uint64_t> group_labels() const;
  /// Throws MalformedInput when there is no embedding.
  graphs::NearTriangulation near_triangulation() const;

  // Raw per-edge values in canonical orientation (a and b already swapped).
  std::map<graphs::Edge, std::pair<json, json>> raw_decoration;
  std::map<graphs::Edge, json> raw_labels;
};

/// Throws MalformedInput and the graph validation errors.
GraphDocument graph_from_json(const json& j);
json graph_to_json(const graphs::Graph& g, const std::optional<graphs::PlaneEmbedding>& emb = std::nullopt);

/// {"lists": [[elem, ...], ...]}
coloring::ListAssignment lists_from_json(const algebra::Field& field, const json& j);
json lists_to_json(const algebra::Field& field, const coloring::ListAssignment& lists);
/// Group lists are non-negative element indices.
coloring::GroupLists group_lists_from_json(const json& j);

/// {"leaves": [{"kind": "triangulation", "graph": {...}} | {"kind": "v8"}, ...],
///  "glues": [{"part": 1, "ident": [[l, r], ...], "drop": [[u, v], ...]}, ...]}
graphs::CliqueSumTree tree_from_json(const json& j);
json tree_to_json(const graphs::CliqueSumTree& tree);

json monomial_to_json(const polys::ExponentVector& m);
polys::ExponentVector monomial_from_json(const json& j);
json certificate_to_json(const algebra::Field& field, const certify::MonomialCertificate& cert);
json poly_to_json(const polys::SparsePoly& p);

/// Throws MalformedInput with the path in the message.
json read_json_file(const std::string& path);

}  // namespace nullcolor::io
