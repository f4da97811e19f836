#include "nullcolor/io.hpp"

#include <fstream>
#include <sstream>

#include "nullcolor/error.hpp"

namespace nullcolor::io {

using algebra::Field;
using algebra::FieldElement;
using algebra::FieldSpec;
using graphs::Edge;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

long long as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<long long>();
}

int as_vertex(const json& j) { return static_cast<int>(as_int(j, "vertex")); }

std::vector<int> as_int_list(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(static_cast<int>(as_int(x, what)));
  return out;
}

unsigned long parse_unsigned(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) bad("expected a non-negative integer, got '" + s + "'");
  return std::stoul(s);
}

}  // namespace

FieldSpec parse_field_spec(const std::string& text) {
  if (text == "Q" || text == "q" || text == "0") return FieldSpec{};
  const auto comma = text.find(',');
  FieldSpec spec;
  spec.characteristic = static_cast<std::uint32_t>(parse_unsigned(text.substr(0, comma)));
  if (comma != std::string::npos) spec.degree = static_cast<unsigned>(parse_unsigned(text.substr(comma + 1)));
  if (spec.characteristic == 0) bad("characteristic 0 is written Q");
  if (spec.degree == 0) bad("extension degree must be positive");
  return spec;
}

FieldSpec field_spec_from_json(const json& j) {
  if (j.is_string()) return parse_field_spec(j.get<std::string>());
  if (j.is_number_integer()) return parse_field_spec(std::to_string(j.get<long long>()));
  if (j.is_object()) {
    FieldSpec spec;
    if (!j.contains("p")) bad("field object needs \"p\"");
    spec.characteristic = static_cast<std::uint32_t>(as_int(j.at("p"), "p"));
    if (j.contains("k")) spec.degree = static_cast<unsigned>(as_int(j.at("k"), "k"));
    if (j.contains("modulus"))
      for (const auto& c : j.at("modulus")) spec.modulus.push_back(static_cast<std::uint32_t>(as_int(c, "modulus")));
    return spec;
  }
  bad("unrecognised field description");
}

json field_to_json(const Field& field) {
  if (!field.is_finite()) return "Q";
  json j;
  j["p"] = field.characteristic();
  j["k"] = field.degree();
  j["modulus"] = field.finite().modulus();
  return j;
}

json element_to_json(const Field& field, const FieldElement& e) { return field.to_string(e); }

FieldElement element_from_json(const Field& field, const json& j) {
  if (j.is_number_integer()) return field.from_int(j.get<long long>());
  if (j.is_array()) {
    if (!field.is_finite() || field.degree() == 1) {
      if (j.size() == 1) return element_from_json(field, j[0]);
      bad("coefficient arrays need an extension field");
    }
    if (j.size() > field.degree()) bad("too many coefficients for the field");
    std::vector<std::uint32_t> c(field.degree(), 0);
    for (std::size_t i = 0; i < j.size(); ++i) {
      const long long v = as_int(j[i], "coefficient");
      const long long p = field.characteristic();
      c[i] = static_cast<std::uint32_t>(((v % p) + p) % p);
    }
    return FieldElement(field.finite().from_coefficients(c));
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (!s.empty() && s.front() == '[') {
      json parsed;
      try {
        parsed = json::parse(s);
      } catch (const json::exception&) {
        bad("cannot parse element '" + s + "'");
      }
      return element_from_json(field, parsed);
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) bad("cannot parse element '" + s + "'");
    q.canonicalize();
    if (!field.is_finite()) return FieldElement(q);
    if (q.get_den() != 1) {
      const FieldElement den = element_from_json(field, json(q.get_den().get_str()));
      if (field.is_zero(den)) bad("denominator vanishes in the field");
      return field.mul(element_from_json(field, json(q.get_num().get_str())), field.inv(den));
    }
    const mpz_class p = field.characteristic();
    mpz_class r = q.get_num() % p;
    if (r < 0) r += p;
    return field.from_int(r.get_si());
  }
  bad("field elements are integers, coefficient arrays or strings");
}

// ---------------------------------------------------------------------------

polys::Decoration GraphDocument::decoration(const Field& field) const {
  polys::Decoration d = polys::Decoration::standard(graph, field);
  for (const auto& [e, ab] : raw_decoration) d.set(e, element_from_json(field, ab.first), element_from_json(field, ab.second));
  return d;
}

polys::EdgeLabeling GraphDocument::labeling(const Field& field) const {
  polys::EdgeLabeling l = polys::EdgeLabeling::zeros(graph, field);
  for (const auto& [e, v] : raw_labels) l.set(e, element_from_json(field, v));
  return l;
}

std::vector<std::uint64_t> GraphDocument::group_labels() const {
  std::vector<std::uint64_t> out;
  for (const auto& e : graph.edges()) {
    auto it = raw_labels.find(e);
    if (it == raw_labels.end()) {
      out.push_back(0);
      continue;
    }
    const long long v = as_int(it->second, "group label");
    if (v < 0) throw Error(ErrorCode::LabelOutOfRange, "group labels are non-negative residues");
    out.push_back(static_cast<std::uint64_t>(v));
  }
  return out;
}

graphs::NearTriangulation GraphDocument::near_triangulation() const {
  if (!embedding) bad("graph has no embedding");
  return graphs::validate_near_triangulation(graph, *embedding);
}

GraphDocument graph_from_json(const json& j) {
  if (!j.is_object()) bad("graph document must be an object");
  if (!j.contains("n")) bad("graph document needs \"n\"");
  const long long n = as_int(j.at("n"), "n");
  if (n < 0) bad("n must be non-negative");
  GraphDocument doc;
  std::vector<Edge> edges;
  std::map<Edge, bool> toward_larger;
  const json empty = json::array();
  for (const auto& item : j.contains("edges") ? j.at("edges") : empty) {
    int u, v;
    json a, b, label;
    if (item.is_array()) {
      if (item.size() != 2) bad("edge arrays have two entries");
      u = as_vertex(item[0]);
      v = as_vertex(item[1]);
    } else if (item.is_object()) {
      if (!item.contains("u") || !item.contains("v")) bad("edge objects need \"u\" and \"v\"");
      u = as_vertex(item.at("u"));
      v = as_vertex(item.at("v"));
      if (item.contains("a")) a = item.at("a");
      if (item.contains("b")) b = item.at("b");
      if (item.contains("label")) label = item.at("label");
      if (a.is_null() != b.is_null()) bad("give both a and b or neither");
    } else {
      bad("edges are [u, v] pairs or objects");
    }
    const Edge e = graphs::make_edge(u, v);
    edges.push_back(e);
    toward_larger[e] = u < v;
    if (!a.is_null()) doc.raw_decoration[e] = u < v ? std::make_pair(a, b) : std::make_pair(b, a);
    if (!label.is_null()) doc.raw_labels[e] = label;
  }
  doc.graph = graphs::Graph(static_cast<int>(n), std::move(edges));
  std::vector<bool> dir;
  for (const auto& e : doc.graph.edges()) dir.push_back(toward_larger.at(e));
  doc.orientation = polys::Orientation(std::move(dir));
  if (j.contains("field")) doc.field = field_spec_from_json(j.at("field"));
  if (j.contains("embedding")) {
    const auto& ej = j.at("embedding");
    if (!ej.is_object() || !ej.contains("rotations")) bad("embedding needs \"rotations\"");
    graphs::PlaneEmbedding emb;
    for (const auto& r : ej.at("rotations")) emb.rotations.push_back(as_int_list(r, "rotation"));
    if (ej.contains("outer_face")) emb.outer_face = as_int_list(ej.at("outer_face"), "outer_face");
    doc.embedding = std::move(emb);
  }
  return doc;
}

json graph_to_json(const graphs::Graph& g, const std::optional<graphs::PlaneEmbedding>& emb) {
  json j;
  j["n"] = g.order();
  j["edges"] = json::array();
  for (const auto& e : g.edges()) j["edges"].push_back({e.u, e.v});
  if (emb) j["embedding"] = {{"rotations", emb->rotations}, {"outer_face", emb->outer_face}};
  return j;
}

coloring::ListAssignment lists_from_json(const Field& field, const json& j) {
  const json& arr = j.is_object() && j.contains("lists") ? j.at("lists") : j;
  if (!arr.is_array()) bad("lists document must be {\"lists\": [[...], ...]}");
  std::vector<std::vector<FieldElement>> lists;
  for (const auto& l : arr) {
    if (!l.is_array()) bad("each list must be an array");
    std::vector<FieldElement> row;
    for (const auto& x : l) row.push_back(element_from_json(field, x));
    lists.push_back(std::move(row));
  }
  return coloring::ListAssignment(std::move(lists));
}

json lists_to_json(const Field& field, const coloring::ListAssignment& lists) {
  json arr = json::array();
  for (const auto& l : lists.lists()) {
    json row = json::array();
    for (const auto& x : l) row.push_back(element_to_json(field, x));
    arr.push_back(std::move(row));
  }
  return {{"lists", arr}};
}

coloring::GroupLists group_lists_from_json(const json& j) {
  const json& arr = j.is_object() && j.contains("lists") ? j.at("lists") : j;
  if (!arr.is_array()) bad("lists document must be {\"lists\": [[...], ...]}");
  coloring::GroupLists out;
  for (const auto& l : arr) {
    if (!l.is_array()) bad("each list must be an array");
    std::vector<std::uint64_t> row;
    for (const auto& x : l) {
      const long long v = as_int(x, "group element");
      if (v < 0) throw Error(ErrorCode::LabelOutOfRange, "group elements are non-negative indices");
      row.push_back(static_cast<std::uint64_t>(v));
    }
    out.push_back(std::move(row));
  }
  return out;
}

graphs::CliqueSumTree tree_from_json(const json& j) {
  if (!j.is_object() || !j.contains("leaves")) bad("tree document needs \"leaves\"");
  graphs::CliqueSumTree tree;
  for (const auto& lj : j.at("leaves")) {
    graphs::CliqueSumLeaf leaf;
    const std::string kind = lj.value("kind", "");
    if (kind == "v8") {
      leaf.kind = graphs::CliqueSumLeaf::Kind::V8;
    } else if (kind == "triangulation") {
      leaf.kind = graphs::CliqueSumLeaf::Kind::Triangulation;
      if (!lj.contains("graph")) bad("triangulation leaves need \"graph\"");
      leaf.triangulation = graph_from_json(lj.at("graph")).near_triangulation();
    } else {
      bad("leaf kind must be \"triangulation\" or \"v8\"");
    }
    tree.leaves.push_back(std::move(leaf));
  }
  if (j.contains("glues"))
    for (const auto& gj : j.at("glues")) {
      graphs::GlueStep step;
      step.part = static_cast<std::size_t>(as_int(gj.at("part"), "part"));
      for (const auto& p : gj.at("ident")) {
        const auto pair = as_int_list(p, "ident");
        if (pair.size() != 2) bad("ident entries are [left, right]");
        step.ident.emplace_back(pair[0], pair[1]);
      }
      if (gj.contains("drop"))
        for (const auto& d : gj.at("drop")) {
          const auto pair = as_int_list(d, "drop");
          if (pair.size() != 2) bad("drop entries are [u, v]");
          step.drop.push_back(graphs::make_edge(pair[0], pair[1]));
        }
      tree.glues.push_back(std::move(step));
    }
  return tree;
}

json tree_to_json(const graphs::CliqueSumTree& tree) {
  json j;
  j["leaves"] = json::array();
  for (const auto& leaf : tree.leaves) {
    if (leaf.kind == graphs::CliqueSumLeaf::Kind::V8) {
      j["leaves"].push_back({{"kind", "v8"}});
      continue;
    }
    j["leaves"].push_back(
        {{"kind", "triangulation"}, {"graph", graph_to_json(leaf.triangulation->graph, leaf.triangulation->embedding)}});
  }
  j["glues"] = json::array();
  for (const auto& step : tree.glues) {
    json ident = json::array(), drop = json::array();
    for (auto [l, r] : step.ident) ident.push_back({l, r});
    for (const auto& e : step.drop) drop.push_back({e.u, e.v});
    j["glues"].push_back({{"part", step.part}, {"ident", ident}, {"drop", drop}});
  }
  return j;
}

json monomial_to_json(const polys::ExponentVector& m) { return m.values(); }

polys::ExponentVector monomial_from_json(const json& j) {
  if (!j.is_array()) bad("monomial must be an array of exponents");
  std::vector<unsigned> e;
  for (const auto& x : j) {
    const long long v = as_int(x, "exponent");
    if (v < 0) bad("exponents are non-negative");
    e.push_back(static_cast<unsigned>(v));
  }
  return polys::ExponentVector(std::move(e));
}

json certificate_to_json(const Field& field, const certify::MonomialCertificate& cert) {
  json trace = json::array();
  for (const auto& s : cert.trace) trace.push_back({{"case", std::string(certify::step_name(s.kind))}, {"vertices", s.vertices}});
  return {{"monomial", monomial_to_json(cert.monomial)},
          {"coefficient", element_to_json(field, cert.coefficient)},
          {"trace", trace}};
}

json poly_to_json(const polys::SparsePoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms())
    terms.push_back({{"exponents", monomial_to_json(m)}, {"coeff", element_to_json(p.field(), c)}});
  return {{"field", field_to_json(p.field())}, {"num_vars", p.num_vars()}, {"terms", terms}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

}  // namespace nullcolor::io
