// Capped expansion of a product of affine factors.
//
// Monomials are packed into one integer with variable 0 in the most
// significant field, so integer order equals lexicographic order on exponent
// vectors. Multiplying every term by x_i adds a constant to every key, which
// preserves order; one factor step is therefore a three-way merge of shifted
// copies of the sorted term list (x_u part, x_v part, constant part).

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "nullcolor/error.hpp"
#include "nullcolor/polys.hpp"

namespace nullcolor::polys {

namespace {

using u128 = unsigned __int128;

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

struct Layout {
  std::vector<unsigned> shift;
  std::vector<unsigned> width;
  std::vector<unsigned> cap;
  unsigned total_bits = 0;
};

Layout make_layout(const FactorList& f, const std::vector<unsigned>& caps) {
  Layout lay;
  const auto counts = f.variable_counts();
  const std::size_t n = counts.size();
  lay.shift.assign(n, 0);
  lay.width.assign(n, 0);
  lay.cap.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    lay.cap[i] = std::min(caps[i], counts[i]);
    lay.width[i] = static_cast<unsigned>(std::bit_width(lay.cap[i]));
    lay.total_bits += lay.width[i];
  }
  unsigned pos = lay.total_bits;
  for (std::size_t i = 0; i < n; ++i) {
    pos -= lay.width[i];
    lay.shift[i] = pos;
  }
  return lay;
}

template <class Key, class Ops>
SparsePoly run(const FactorList& f, const Layout& lay, const Ops& ops, std::size_t budget) {
  using Coeff = typename Ops::Coeff;
  using Term = std::pair<Key, Coeff>;
  const Field& field = f.field();

  auto degree_of = [&](Key key, int var) -> unsigned {
    const unsigned w = lay.width[var];
    if (w == 0) return 0;
    return static_cast<unsigned>((key >> lay.shift[var]) & ((Key{1} << w) - 1));
  };

  std::vector<Term> terms{Term{Key{0}, ops.one()}};
  std::vector<Term> next;

  for (const auto& factor : f.factors()) {
    struct Stream {
      bool active = false;
      int var = -1;  // -1: constant part, no shift
      Key offset{0};
      Coeff scale{};
      std::size_t pos = 0;
    };
    Stream streams[3];
    auto setup = [&](Stream& s, int var, const FieldElement& coeff) {
      if (field.is_zero(coeff)) return;
      if (var >= 0 && lay.cap[var] == 0) return;
      s.active = true;
      s.var = var;
      s.offset = var >= 0 ? (Key{1} << lay.shift[var]) : Key{0};
      s.scale = ops.from(coeff);
    };
    setup(streams[0], factor.u, factor.a);
    setup(streams[1], factor.v, factor.b);
    setup(streams[2], -1, factor.c);

    // Advance a stream past terms whose shifted degree would exceed the cap.
    auto settle = [&](Stream& s) {
      if (!s.active || s.var < 0) return;
      while (s.pos < terms.size() && degree_of(terms[s.pos].first, s.var) >= lay.cap[s.var]) ++s.pos;
    };
    for (auto& s : streams) settle(s);

    next.clear();
    next.reserve(terms.size() * 2);
    while (true) {
      int best = -1;
      Key best_key{0};
      for (int i = 0; i < 3; ++i) {
        const Stream& s = streams[i];
        if (!s.active || s.pos >= terms.size()) continue;
        const Key k = terms[s.pos].first + s.offset;
        if (best < 0 || k < best_key) {
          best = i;
          best_key = k;
        }
      }
      if (best < 0) break;
      Coeff acc{};
      bool have = false;
      for (auto& s : streams) {
        if (!s.active || s.pos >= terms.size()) continue;
        if (terms[s.pos].first + s.offset != best_key) continue;
        Coeff c = ops.mul(terms[s.pos].second, s.scale);
        acc = have ? ops.add(acc, c) : std::move(c);
        have = true;
        ++s.pos;
        settle(s);
      }
      if (!ops.is_zero(acc)) {
        next.emplace_back(best_key, std::move(acc));
        if (next.size() > budget)
          throw Error(ErrorCode::BudgetExceeded, "expansion exceeds " + std::to_string(budget) + " monomials");
      }
    }
    terms.swap(next);
  }

  SparsePoly out(field, f.num_vars());
  const std::size_t n = static_cast<std::size_t>(f.num_vars());
  for (const auto& [key, coeff] : terms) {
    ExponentVector m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = degree_of(key, static_cast<int>(i));
    out.accumulate(m, ops.to(coeff));
  }
  return out;
}

template <class Key>
SparsePoly dispatch_field(const FactorList& f, const Layout& lay, std::size_t budget) {
  if (f.field().is_finite()) return run<Key>(f, lay, FiniteOps{&f.field().finite()}, budget);
  return run<Key>(f, lay, RationalOps{}, budget);
}

}  // namespace

SparsePoly expand_capped(const FactorList& f, const std::vector<unsigned>& caps, std::size_t budget) {
  if (caps.size() != static_cast<std::size_t>(f.num_vars()))
    throw Error(ErrorCode::MalformedInput, "one cap per variable required");
  const Layout lay = make_layout(f, caps);
  if (lay.total_bits <= 64) return dispatch_field<std::uint64_t>(f, lay, budget);
  if (lay.total_bits <= 128) return dispatch_field<u128>(f, lay, budget);
  throw Error(ErrorCode::BudgetExceeded,
              "packed exponent layout needs " + std::to_string(lay.total_bits) + " bits (limit 128)");
}

SparsePoly expand_capped(const FactorList& f, std::optional<unsigned> cap, std::size_t budget) {
  const unsigned c = cap.value_or(std::numeric_limits<unsigned>::max());
  return expand_capped(f, std::vector<unsigned>(static_cast<std::size_t>(f.num_vars()), c), budget);
}

}  // namespace nullcolor::polys
