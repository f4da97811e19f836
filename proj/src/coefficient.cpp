// Single-coefficient extraction without expansion.
//
// Each factor contributes either its x_u term, its x_v term or its constant.
// States are residual exponent vectors (target minus what has been picked so
// far). Factors are processed in a vertex-elimination order so that a
// variable's residual is forced to zero as soon as its last factor is seen,
// which keeps the number of live states proportional to the frontier.

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "nullcolor/error.hpp"
#include "nullcolor/polys.hpp"

namespace nullcolor::polys {

namespace {

using u128 = unsigned __int128;

struct PackedHash {
  std::size_t operator()(std::uint64_t k) const noexcept { return std::hash<std::uint64_t>{}(k * 0x9E3779B97F4A7C15ull); }
  std::size_t operator()(u128 k) const noexcept {
    const auto lo = static_cast<std::uint64_t>(k);
    const auto hi = static_cast<std::uint64_t>(k >> 64);
    return std::hash<std::uint64_t>{}(lo * 0x9E3779B97F4A7C15ull ^ (hi + 0x632BE59BD9B4E019ull + (lo << 6)));
  }
  std::size_t operator()(const std::vector<unsigned>& k) const noexcept {
    std::size_t h = k.size();
    for (unsigned x : k) h = h * 1000003u ^ x;
    return h;
  }
};

template <class Key>
struct PackedCodec {
  std::vector<unsigned> shift, width;

  unsigned get(const Key& k, int var) const {
    if (width[var] == 0) return 0;
    return static_cast<unsigned>((k >> shift[var]) & ((Key{1} << width[var]) - 1));
  }
  Key decrement(const Key& k, int var) const { return k - (Key{1} << shift[var]); }
  Key encode(const std::vector<unsigned>& vals) const {
    Key k{0};
    for (std::size_t i = 0; i < vals.size(); ++i) k |= Key{vals[i]} << shift[i];
    return k;
  }
};

struct VectorCodec {
  unsigned get(const std::vector<unsigned>& k, int var) const { return k[var]; }
  std::vector<unsigned> decrement(std::vector<unsigned> k, int var) const {
    --k[var];
    return k;
  }
  std::vector<unsigned> encode(const std::vector<unsigned>& vals) const { return vals; }
};

// Order in which factors are consumed: vertices are activated greedily by
// their number of factors into already-active vertices; each factor runs once
// all of its variables are active.
std::vector<std::size_t> factor_schedule(const FactorList& f) {
  const Field& field = f.field();
  const int n = f.num_vars();
  std::vector<std::vector<std::size_t>> incident(static_cast<std::size_t>(n));
  std::vector<std::size_t> schedule;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& fac = f.factors()[i];
    const bool hu = !field.is_zero(fac.a), hv = !field.is_zero(fac.b);
    if (!hu && !hv) {
      schedule.push_back(i);
      continue;
    }
    if (hu) incident[fac.u].push_back(i);
    if (hv && (!hu || fac.v != fac.u)) incident[fac.v].push_back(i);
  }
  std::vector<char> active(static_cast<std::size_t>(n), 0);
  std::vector<char> emitted(f.size(), 0);
  for (auto i : schedule) emitted[i] = 1;

  auto ready = [&](std::size_t i) {
    const auto& fac = f.factors()[i];
    const bool hu = !field.is_zero(fac.a), hv = !field.is_zero(fac.b);
    return (!hu || active[fac.u]) && (!hv || active[fac.v]);
  };

  for (int step = 0; step < n; ++step) {
    int pick = -1;
    int best = -1;
    for (int w = 0; w < n; ++w) {
      if (active[w] || incident[w].empty()) continue;
      int score = 0;
      for (auto i : incident[w]) {
        const auto& fac = f.factors()[i];
        const int other = fac.u == w ? fac.v : fac.u;
        if (other != w && active[other]) ++score;
      }
      if (score > best) {
        best = score;
        pick = w;
      }
    }
    if (pick < 0) break;
    active[pick] = 1;
    for (auto i : incident[pick])
      if (!emitted[i] && ready(i)) {
        emitted[i] = 1;
        schedule.push_back(i);
      }
  }
  return schedule;
}

template <class Key, class Codec, class Ops>
FieldElement run_dp(const FactorList& f, const ExponentVector& m, const Codec& codec, const Ops& ops) {
  using Coeff = typename Ops::Coeff;
  const Field& field = f.field();
  auto remaining = f.variable_counts();
  std::unordered_map<Key, Coeff, PackedHash> states, next;
  states.emplace(codec.encode(m.values()), ops.one());

  for (std::size_t idx : factor_schedule(f)) {
    const auto& fac = f.factors()[idx];
    const bool hu = !field.is_zero(fac.a), hv = !field.is_zero(fac.b), hc = !field.is_zero(fac.c);
    const Coeff ca = hu ? ops.from(fac.a) : Coeff{}, cb = hv ? ops.from(fac.b) : Coeff{},
                cc = hc ? ops.from(fac.c) : Coeff{};
    if (hu) --remaining[fac.u];
    if (hv) --remaining[fac.v];
    next.clear();
    auto push = [&](const Key& k, Coeff c) {
      // Prune states that can no longer reach zero residual.
      if (hu && codec.get(k, fac.u) > remaining[fac.u]) return;
      if (hv && codec.get(k, fac.v) > remaining[fac.v]) return;
      auto [it, inserted] = next.try_emplace(k, c);
      if (!inserted) it->second = ops.add(it->second, c);
    };
    for (const auto& [key, coeff] : states) {
      if (hu && codec.get(key, fac.u) > 0) push(codec.decrement(key, fac.u), ops.mul(coeff, ca));
      if (hv && codec.get(key, fac.v) > 0) push(codec.decrement(key, fac.v), ops.mul(coeff, cb));
      if (hc) push(key, ops.mul(coeff, cc));
    }
    states.clear();
    for (auto& [k, c] : next)
      if (!ops.is_zero(c)) states.emplace(k, std::move(c));
    if (states.empty()) return field.zero();
  }

  // Every variable's residual must be exhausted.
  Coeff total{};
  bool have = false;
  for (const auto& [key, coeff] : states) {
    bool done = true;
    for (int v = 0; v < f.num_vars() && done; ++v) done = codec.get(key, v) == 0;
    if (!done) continue;
    total = have ? ops.add(total, coeff) : coeff;
    have = true;
  }
  return have ? ops.to(total) : field.zero();
}

struct FiniteOps {
  using Coeff = std::uint32_t;
  const algebra::FiniteField* ff;
  Coeff from(const FieldElement& e) const { return e.index(); }
  FieldElement to(Coeff c) const { return FieldElement(c); }
  Coeff one() const { return ff->one(); }
  bool is_zero(Coeff c) const { return c == 0; }
  Coeff add(Coeff a, Coeff b) const { return ff->add(a, b); }
  Coeff mul(Coeff a, Coeff b) const { return ff->mul(a, b); }
};

struct RationalOps {
  using Coeff = mpq_class;
  Coeff from(const FieldElement& e) const { return e.rational(); }
  FieldElement to(const Coeff& c) const { return FieldElement(c); }
  Coeff one() const { return 1; }
  bool is_zero(const Coeff& c) const { return sgn(c) == 0; }
  Coeff add(const Coeff& a, const Coeff& b) const { return a + b; }
  Coeff mul(const Coeff& a, const Coeff& b) const { return a * b; }
};

template <class Key, class Codec>
FieldElement dispatch(const FactorList& f, const ExponentVector& m, const Codec& codec) {
  if (f.field().is_finite()) return run_dp<Key>(f, m, codec, FiniteOps{&f.field().finite()});
  return run_dp<Key>(f, m, codec, RationalOps{});
}

template <class Key>
PackedCodec<Key> packed_codec(const ExponentVector& m) {
  PackedCodec<Key> c;
  const std::size_t n = m.size();
  c.shift.assign(n, 0);
  c.width.assign(n, 0);
  unsigned pos = 0;
  for (std::size_t i = 0; i < n; ++i) {
    c.width[i] = static_cast<unsigned>(std::bit_width(m[i]));
    c.shift[i] = pos;
    pos += c.width[i];
  }
  return c;
}

}  // namespace

FieldElement coeff_of_monomial(const FactorList& f, const ExponentVector& m) {
  if (static_cast<int>(m.size()) != f.num_vars())
    throw Error(ErrorCode::MalformedInput, "exponent vector length does not match variable count");
  const Field& field = f.field();
  if (f.homogeneous()) {
    std::size_t linear = 0;
    for (const auto& fac : f.factors())
      if (!field.is_zero(fac.a) || !field.is_zero(fac.b)) ++linear;
    if (m.total_degree() != linear) return field.zero();
  }
  const auto counts = f.variable_counts();
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > counts[i]) return field.zero();

  unsigned bits = 0;
  for (std::size_t i = 0; i < m.size(); ++i) bits += static_cast<unsigned>(std::bit_width(m[i]));
  if (bits <= 64) return dispatch<std::uint64_t>(f, m, packed_codec<std::uint64_t>(m));
  if (bits <= 128) return dispatch<u128>(f, m, packed_codec<u128>(m));
  return dispatch<std::vector<unsigned>>(f, m, VectorCodec{});
}

}  // namespace nullcolor::polys
