#include "nullcolor/algebra.hpp"

#include <algorithm>

#include "nullcolor/error.hpp"

namespace nullcolor::algebra {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// Remainder of a by monic b over Z_p, both little-endian; result trimmed.
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b,
                                    std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i <= db; ++i) {
        const std::uint64_t t = std::uint64_t{lead} * b[i] % p;
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - t) % p);
      }
    }
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

}  // namespace

FieldElement::FieldElement(mpq_class value) : value_(std::move(value)) {
  std::get<mpq_class>(value_).canonicalize();
}

bool operator<(const FieldElement& a, const FieldElement& b) {
  if (a.value_.index() != b.value_.index()) return a.value_.index() < b.value_.index();
  if (a.is_finite()) return a.index() < b.index();
  return cmp(a.rational(), b.rational()) < 0;
}

// ---------------------------------------------------------------------------

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t euler_phi(std::uint64_t n) noexcept {
  std::uint64_t r = n;
  for (std::uint64_t f : prime_factors(n)) r = r / f * (f - 1);
  return r;
}

std::uint64_t multiplicative_order_mod(std::uint64_t base, std::uint64_t m) {
  if (m < 2 || gcd(base % m, m) != 1) throw Error(ErrorCode::PreconditionViolated, "base not a unit mod m");
  std::uint64_t x = base % m;
  std::uint64_t e = 1;
  while (x != 1) {
    x = x * (base % m) % m;
    ++e;
  }
  return e;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
  const unsigned k = static_cast<unsigned>(modulus.size()) - 1;
  if (k <= 1) return k == 1;
  for (unsigned d = 1; d <= k / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    std::vector<std::uint32_t> h(d + 1, 0);
    h[d] = 1;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (unsigned i = 0; i < d; ++i) {
        h[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (poly_mod(modulus, h, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned k) {
  const std::uint64_t count = ipow(p, k);
  std::vector<std::uint32_t> f(k + 1, 0);
  f[k] = 1;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t c = code;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (is_irreducible(p, f)) return f;
  }
  throw Error(ErrorCode::ReducibleModulus, "no irreducible polynomial found");
}

// ---------------------------------------------------------------------------

FiniteField::FiniteField(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(static_cast<std::uint32_t>(ipow(p, k))), modulus_(std::move(modulus)) {
  one_ = static_cast<std::uint32_t>(ipow(p, k - 1));
  if (k_ == 1) return;

  // Locate a primitive element by testing g^((q-1)/r) != 1 for every prime r | q-1.
  const std::uint64_t group = q_ - 1;
  const auto factors = prime_factors(group);
  auto poly_pow = [&](std::vector<std::uint32_t> base, std::uint64_t e) {
    std::vector<std::uint32_t> r(k_, 0);
    r[0] = 1;
    while (e > 0) {
      if (e & 1) r = poly_mulmod(r, base);
      base = poly_mulmod(base, base);
      e >>= 1;
    }
    return r;
  };
  std::vector<std::uint32_t> unit(k_, 0);
  unit[0] = 1;
  std::uint32_t primitive = 0;
  for (std::uint32_t g = 1; g < q_ && primitive == 0; ++g) {
    const auto coeffs = coefficients(g);
    bool ok = true;
    for (std::uint64_t r : factors) {
      if (poly_pow(coeffs, group / r) == unit) {
        ok = false;
        break;
      }
    }
    if (ok) primitive = g;
  }

  exp_.assign(group, 0);
  log_.assign(q_, 0);
  std::vector<std::uint32_t> cur = unit;
  const auto gen = coefficients(primitive);
  for (std::uint64_t e = 0; e < group; ++e) {
    const std::uint32_t idx = from_coefficients(cur);
    exp_[e] = idx;
    log_[idx] = static_cast<std::uint32_t>(e);
    cur = poly_mulmod(cur, gen);
  }
}

std::vector<std::uint32_t> FiniteField::poly_mulmod(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b) const {
  std::vector<std::uint32_t> prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p_);
  }
  auto r = poly_mod(std::move(prod), modulus_, p_);
  r.resize(k_, 0);
  return r;
}

std::uint32_t FiniteField::add_digits(std::uint32_t a, std::uint32_t b) const noexcept {
  std::uint32_t r = 0;
  std::uint32_t place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint32_t d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    r += d * place;
    place *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

std::uint32_t FiniteField::neg(std::uint32_t a) const noexcept {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  std::uint32_t r = 0;
  std::uint32_t place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    const std::uint32_t d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * place;
    place *= p_;
    a /= p_;
  }
  return r;
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorCode::ZeroElement, "inverse of zero");
  if (k_ == 1) return pow(a, p_ - 2);
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t r = one_;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t FiniteField::from_int(long long v) const noexcept {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r) * one_;
}

std::vector<std::uint32_t> FiniteField::coefficients(std::uint32_t index) const {
  std::vector<std::uint32_t> c(k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    c[k_ - 1 - i] = index % p_;
    index /= p_;
  }
  return c;
}

std::uint32_t FiniteField::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  std::uint32_t idx = 0;
  for (unsigned i = 0; i < k_; ++i) idx = idx * p_ + (i < coeffs.size() ? coeffs[i] % p_ : 0);
  return idx;
}

// ---------------------------------------------------------------------------

Field Field::make(const FieldSpec& spec) {
  if (spec.characteristic == 0) {
    if (spec.degree != 1 || !spec.modulus.empty())
      throw Error(ErrorCode::MalformedInput, "extensions of the rationals are not supported");
    return Field(FieldSpec{0, 1, {}}, nullptr);
  }
  if (!is_prime(spec.characteristic))
    throw Error(ErrorCode::NotPrime, std::to_string(spec.characteristic) + " is not prime");
  if (spec.degree == 0) throw Error(ErrorCode::MalformedInput, "extension degree must be positive");
  std::uint64_t size = 1;
  for (unsigned i = 0; i < spec.degree; ++i) {
    size *= spec.characteristic;
    if (size > kMaxFieldSize)
      throw Error(ErrorCode::FieldTooLarge, "field exceeds " + std::to_string(kMaxFieldSize) + " elements");
  }
  FieldSpec resolved = spec;
  if (spec.degree == 1) {
    resolved.modulus.clear();
  } else if (spec.modulus.empty()) {
    resolved.modulus = default_modulus(spec.characteristic, spec.degree);
  } else {
    if (spec.modulus.size() != spec.degree + 1 || spec.modulus.back() != 1)
      throw Error(ErrorCode::MalformedInput, "modulus must be monic of the stated degree");
    for (auto c : spec.modulus)
      if (c >= spec.characteristic) throw Error(ErrorCode::MalformedInput, "modulus coefficient out of range");
    if (!is_irreducible(spec.characteristic, spec.modulus))
      throw Error(ErrorCode::ReducibleModulus, "modulus factors over Z_p");
  }
  auto tables = std::make_shared<const FiniteField>(resolved.characteristic, resolved.degree, resolved.modulus);
  return Field(std::move(resolved), std::move(tables));
}

FieldKind Field::kind() const noexcept {
  if (!finite_) return FieldKind::Rational;
  return spec_.degree == 1 ? FieldKind::Prime : FieldKind::Extension;
}

std::optional<std::uint64_t> Field::size() const noexcept {
  if (!finite_) return std::nullopt;
  return finite_->size();
}

const FiniteField& Field::finite() const {
  if (!finite_) throw Error(ErrorCode::InfiniteField, "operation needs a finite field");
  return *finite_;
}

FieldElement Field::zero() const { return finite_ ? FieldElement(0u) : FieldElement(mpq_class(0)); }
FieldElement Field::one() const { return finite_ ? FieldElement(finite_->one()) : FieldElement(mpq_class(1)); }

FieldElement Field::from_int(long long v) const {
  if (finite_) return FieldElement(finite_->from_int(v));
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return FieldElement(mpq_class(z));
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  if (finite_) return FieldElement(finite_->add(a.index(), b.index()));
  return FieldElement(mpq_class(a.rational() + b.rational()));
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  if (finite_) return FieldElement(finite_->sub(a.index(), b.index()));
  return FieldElement(mpq_class(a.rational() - b.rational()));
}

FieldElement Field::neg(const FieldElement& a) const {
  if (finite_) return FieldElement(finite_->neg(a.index()));
  return FieldElement(mpq_class(-a.rational()));
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  if (finite_) return FieldElement(finite_->mul(a.index(), b.index()));
  return FieldElement(mpq_class(a.rational() * b.rational()));
}

FieldElement Field::inv(const FieldElement& a) const {
  if (is_zero(a)) throw Error(ErrorCode::ZeroElement, "inverse of zero");
  if (finite_) return FieldElement(finite_->inv(a.index()));
  return FieldElement(mpq_class(1 / a.rational()));
}

FieldElement Field::pow(const FieldElement& a, std::uint64_t e) const {
  if (finite_) return FieldElement(finite_->pow(a.index(), e));
  FieldElement r = one();
  FieldElement base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

bool Field::is_zero(const FieldElement& a) const {
  if (finite_) return a.index() == 0;
  return sgn(a.rational()) == 0;
}

bool Field::contains(const FieldElement& a) const {
  if (finite_) return a.is_finite() && a.index() < finite_->size();
  return !a.is_finite();
}

std::vector<FieldElement> Field::elements() const {
  const auto& ff = finite();
  std::vector<FieldElement> out;
  out.reserve(ff.size());
  for (std::uint32_t i = 0; i < ff.size(); ++i) out.emplace_back(i);
  return out;
}

FieldElement Field::element(std::uint64_t index) const {
  const auto& ff = finite();
  if (index >= ff.size()) throw Error(ErrorCode::MalformedInput, "element index out of range");
  return FieldElement(static_cast<std::uint32_t>(index));
}

std::string Field::to_string(const FieldElement& a) const {
  if (!finite_) return a.rational().get_str();
  if (finite_->degree() == 1) return std::to_string(a.index());
  std::string s = "[";
  const auto c = finite_->coefficients(a.index());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "]";
}

// ---------------------------------------------------------------------------

std::uint64_t element_order(const Field& field, const FieldElement& g) {
  const auto& ff = field.finite();
  if (g.index() == 0) throw Error(ErrorCode::ZeroElement, "order of zero is undefined");
  const std::uint64_t group = ff.size() - 1;
  // The order divides |F*|; test divisors in increasing order.
  std::uint64_t best = group;
  for (std::uint64_t d = 1; d * d <= group; ++d) {
    if (group % d != 0) continue;
    if (ff.pow(g.index(), d) == ff.one()) return d;
    const std::uint64_t other = group / d;
    if (other < best && ff.pow(g.index(), other) == ff.one()) best = other;
  }
  return best;
}

FieldElement find_element_of_order(const Field& field, std::uint64_t m) {
  const auto& ff = field.finite();
  const std::uint64_t group = ff.size() - 1;
  if (m == 0 || group % m != 0)
    throw Error(ErrorCode::NoSuchOrder, std::to_string(m) + " does not divide " + std::to_string(group));
  for (std::uint32_t i = 1; i < ff.size(); ++i) {
    FieldElement g(i);
    if (element_order(field, g) == m) return g;
  }
  throw Error(ErrorCode::InvariantViolation, "multiplicative group is not cyclic");
}

}  // namespace nullcolor::algebra
