#include "nullcolor/polys.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "nullcolor/error.hpp"

namespace nullcolor::polys {

namespace {

std::string edge_str(Edge e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

}  // namespace

Decoration Decoration::standard(const Graph& g, const Field& field) {
  Decoration d;
  for (const auto& e : g.edges()) d.set(e, field.one(), field.from_int(-1));
  return d;
}

const DecorationEntry& Decoration::at(Edge e) const {
  auto it = entries_.find(e);
  if (it == entries_.end()) throw Error(ErrorCode::MissingEdge, "no decoration for edge " + edge_str(e));
  return it->second;
}

const FieldElement& Decoration::coefficient_of(Edge e, int w) const {
  const auto& entry = at(e);
  if (w == e.u) return entry.a;
  if (w == e.v) return entry.b;
  throw Error(ErrorCode::UnknownVertex, std::to_string(w) + " is not an endpoint of " + edge_str(e));
}

EdgeLabeling EdgeLabeling::zeros(const Graph& g, const Field& field) {
  EdgeLabeling l;
  for (const auto& e : g.edges()) l.set(e, field.zero());
  return l;
}

const FieldElement& EdgeLabeling::at(Edge e) const {
  auto it = labels_.find(e);
  if (it == labels_.end()) throw Error(ErrorCode::MissingEdge, "no label for edge " + edge_str(e));
  return it->second;
}

// ---------------------------------------------------------------------------

void FactorList::add(AffineFactor f) {
  if (f.u < 0 || f.u >= num_vars_ || f.v < 0 || f.v >= num_vars_)
    throw Error(ErrorCode::UnknownVertex, "factor variable out of range");
  if (!field_.contains(f.a) || !field_.contains(f.b) || !field_.contains(f.c))
    throw Error(ErrorCode::FieldMismatch, "factor coefficient from another field");
  if (f.u == f.v) {
    f.a = field_.add(f.a, f.b);
    f.b = field_.zero();
  }
  factors_.push_back(std::move(f));
}

bool FactorList::homogeneous() const {
  return std::all_of(factors_.begin(), factors_.end(), [&](const AffineFactor& f) { return field_.is_zero(f.c); });
}

std::vector<unsigned> FactorList::variable_counts() const {
  std::vector<unsigned> counts(static_cast<std::size_t>(num_vars_), 0);
  for (const auto& f : factors_) {
    if (!field_.is_zero(f.a)) ++counts[f.u];
    if (!field_.is_zero(f.b)) ++counts[f.v];
  }
  return counts;
}

FactorList FactorList::top_degree_part() const {
  FactorList top(field_, num_vars_);
  FieldElement scalar = field_.one();
  for (const auto& f : factors_) {
    const bool linear = !field_.is_zero(f.a) || !field_.is_zero(f.b);
    if (linear) {
      top.factors_.push_back(AffineFactor{f.u, f.a, f.v, f.b, field_.zero()});
    } else {
      if (field_.is_zero(f.c)) throw Error(ErrorCode::ZeroPolynomial, "a factor is identically zero");
      scalar = field_.mul(scalar, f.c);
    }
  }
  if (scalar != field_.one()) top.factors_.push_back(AffineFactor{0, field_.zero(), 0, field_.zero(), scalar});
  return top;
}

FieldElement FactorList::evaluate(const std::vector<FieldElement>& point) const {
  FieldElement r = field_.one();
  for (const auto& f : factors_) {
    FieldElement t = field_.add(field_.mul(f.a, point.at(f.u)), field_.mul(f.b, point.at(f.v)));
    t = field_.add(t, f.c);
    r = field_.mul(r, t);
    if (field_.is_zero(r)) break;
  }
  return r;
}

// ---------------------------------------------------------------------------

unsigned ExponentVector::total_degree() const noexcept { return std::accumulate(exps_.begin(), exps_.end(), 0u); }

unsigned ExponentVector::max_degree() const noexcept {
  return exps_.empty() ? 0 : *std::max_element(exps_.begin(), exps_.end());
}

ExponentVector operator*(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::MalformedInput, "monomials over different variable sets");
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

FieldElement SparsePoly::coefficient(const ExponentVector& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

void SparsePoly::accumulate(const ExponentVector& m, const FieldElement& c) {
  if (static_cast<int>(m.size()) != num_vars_) throw Error(ErrorCode::MalformedInput, "exponent vector length mismatch");
  if (field_.is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = field_.add(it->second, c);
  if (field_.is_zero(it->second)) terms_.erase(it);
}

SparsePoly SparsePoly::homogeneous_part(unsigned degree) const {
  SparsePoly out(field_, num_vars_);
  for (const auto& [m, c] : terms_)
    if (m.total_degree() == degree) out.terms_.emplace(m, c);
  return out;
}

FieldElement SparsePoly::evaluate(const std::vector<FieldElement>& point) const {
  FieldElement sum = field_.zero();
  for (const auto& [m, c] : terms_) {
    FieldElement t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) t = field_.mul(t, field_.pow(point.at(i), m[i]));
    sum = field_.add(sum, t);
  }
  return sum;
}

// ---------------------------------------------------------------------------

Orientation Orientation::from_code(const Graph& g, std::uint64_t code) {
  std::vector<bool> bits(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) bits[i] = (code >> i) & 1u;
  return Orientation(std::move(bits));
}

int Orientation::head(const Graph& g, std::size_t edge) const {
  const auto& e = g.edges().at(edge);
  return toward_larger(edge) ? e.v : e.u;
}

int Orientation::tail(const Graph& g, std::size_t edge) const {
  const auto& e = g.edges().at(edge);
  return toward_larger(edge) ? e.u : e.v;
}

std::vector<unsigned> Orientation::in_degrees(const Graph& g) const {
  std::vector<unsigned> d(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < g.size(); ++i) ++d[head(g, i)];
  return d;
}

bool Orientation::is_acyclic(const Graph& g) const {
  // Kahn's algorithm on the directed edges.
  std::vector<unsigned> indeg = in_degrees(g);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < g.size(); ++i) out[tail(g, i)].push_back(head(g, i));
  std::vector<int> ready;
  for (int v = 0; v < g.order(); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  int done = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++done;
    for (int w : out[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return done == g.order();
}

// ---------------------------------------------------------------------------

FactorList decorated_factors(const Field& field, const Graph& g, const Decoration& dec, const EdgeLabeling* labels) {
  FactorList f(field, g.order());
  for (const auto& e : g.edges()) {
    const auto& entry = dec.at(e);
    if (field.is_zero(entry.a) || field.is_zero(entry.b))
      throw Error(ErrorCode::ZeroDecoration, "edge " + edge_str(e) + " has a zero decoration entry");
    f.add(AffineFactor{e.u, entry.a, e.v, entry.b, labels ? labels->at(e) : field.zero()});
  }
  return f;
}

unsigned an_number(const FactorList& f, std::size_t budget) {
  const FactorList top = f.top_degree_part();
  const auto counts = top.variable_counts();
  const unsigned limit = counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
  for (unsigned k = 0; k <= limit; ++k)
    if (!expand_capped(top, k, budget).empty()) return k;
  throw Error(ErrorCode::ZeroPolynomial, "top-degree part vanishes");
}

FieldElement orientation_weight(const Field& field, const Graph& g, const Decoration& dec, const Orientation& o) {
  FieldElement w = field.one();
  for (std::size_t i = 0; i < g.size(); ++i) w = field.mul(w, dec.coefficient_of(g.edges()[i], o.head(g, i)));
  return w;
}

}  // namespace nullcolor::polys
