#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace nullcolor::algebra {

/// Largest finite field the library will build (number of elements).
inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 16;

/// Construction parameters for a field. `characteristic == 0` selects the rationals.
///
/// `modulus` is little-endian (constant term first) and monic, so it has
/// `degree + 1` entries; leave it empty to use the default irreducible modulus.
struct FieldSpec {
  std::uint32_t characteristic = 0;
  unsigned degree = 1;
  std::vector<std::uint32_t> modulus;

  bool operator==(const FieldSpec&) const = default;
};

/// An element of a finite field or of the rationals.
///
/// Finite elements are stored by their index in the enumeration order of the
/// field (lexicographic on little-endian coefficient vectors, so for a prime
/// field the index is the residue). Rational elements are kept in lowest terms.
class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(std::uint32_t index) : value_(index) {}
  explicit FieldElement(mpq_class value);

  bool is_finite() const noexcept { return value_.index() == 0; }
  std::uint32_t index() const { return std::get<std::uint32_t>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.value_ == b.value_; }
  /// Total order used only for deterministic containers.
  friend bool operator<(const FieldElement& a, const FieldElement& b);

 private:
  std::variant<std::uint32_t, mpq_class> value_{std::uint32_t{0}};
};

/// Table-driven arithmetic for F_{p^k}, with elements given as raw indices.
/// Multiplication goes through discrete log/exp tables of a primitive element.
class FiniteField {
 public:
  FiniteField(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::uint32_t size() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  std::uint32_t zero() const noexcept { return 0; }
  std::uint32_t one() const noexcept { return one_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    if (k_ == 1) {
      const std::uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    return add_digits(a, b);
  }
  std::uint32_t neg(std::uint32_t a) const noexcept;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    if (k_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
    if (a == 0 || b == 0) return 0;
    std::uint32_t e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  /// Inverse of a nonzero element.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  /// Image of an integer in the prime subfield.
  std::uint32_t from_int(long long v) const noexcept;

  std::vector<std::uint32_t> coefficients(std::uint32_t index) const;
  std::uint32_t from_coefficients(std::span<const std::uint32_t> coeffs) const;

 private:
  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const noexcept;
  std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a,
                                         const std::vector<std::uint32_t>& b) const;

  std::uint32_t p_;
  unsigned k_;
  std::uint32_t q_;
  std::uint32_t one_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

enum class FieldKind { Prime, Extension, Rational };

/// Immutable arithmetic context. Copies share the underlying tables.
class Field {
 public:
  /// Validates the spec; throws NotPrime, ReducibleModulus or FieldTooLarge.
  static Field make(const FieldSpec& spec);
  static Field rationals() { return make(FieldSpec{}); }
  static Field prime(std::uint32_t p) { return make(FieldSpec{p, 1, {}}); }

  FieldKind kind() const noexcept;
  bool is_finite() const noexcept { return finite_ != nullptr; }
  std::uint32_t characteristic() const noexcept { return spec_.characteristic; }
  unsigned degree() const noexcept { return spec_.degree; }
  const FieldSpec& spec() const noexcept { return spec_; }
  std::optional<std::uint64_t> size() const noexcept;
  /// Throws InfiniteField for the rationals.
  const FiniteField& finite() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long long v) const;
  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  /// Throws ZeroElement.
  FieldElement inv(const FieldElement& a) const;
  FieldElement pow(const FieldElement& a, std::uint64_t e) const;
  bool is_zero(const FieldElement& a) const;
  /// Checks that `a` is a canonical element of this field.
  bool contains(const FieldElement& a) const;

  /// All elements in enumeration order. Finite fields only.
  std::vector<FieldElement> elements() const;
  FieldElement element(std::uint64_t index) const;

  std::string to_string(const FieldElement& a) const;

  friend bool operator==(const Field& a, const Field& b) { return a.spec_ == b.spec_; }

 private:
  Field(FieldSpec spec, std::shared_ptr<const FiniteField> finite)
      : spec_(std::move(spec)), finite_(std::move(finite)) {}

  FieldSpec spec_;
  std::shared_ptr<const FiniteField> finite_;
};

bool is_prime(std::uint64_t n) noexcept;
std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t euler_phi(std::uint64_t n) noexcept;
/// Least e >= 1 with base^e = 1 (mod m); requires gcd(base, m) = 1 and m >= 2.
std::uint64_t multiplicative_order_mod(std::uint64_t base, std::uint64_t m);

/// True when the little-endian monic polynomial has no factor of degree 1..deg/2 over Z_p.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& modulus);
/// First monic irreducible of degree k over Z_p, lower coefficients read as a
/// base-p integer (constant term least significant) and scanned upward.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned k);

/// Least n >= 1 with g^n = 1. Throws ZeroElement, InfiniteField.
std::uint64_t element_order(const Field& field, const FieldElement& g);
/// First element (enumeration order) of multiplicative order exactly m. Throws NoSuchOrder.
FieldElement find_element_of_order(const Field& field, std::uint64_t m);

}  // namespace nullcolor::algebra
