#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace gbihom {

/// The base field: either Q or F_p for a prime p.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint64_t modulus = 0;  // 0 for Q

  static FieldSpec rationals() { return {}; }
  /// Throws InvalidInput unless p is prime.
  static FieldSpec prime(std::uint64_t p);

  bool is_prime_field() const { return kind == Kind::PrimeField; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator, residues in [0, p). Arithmetic between scalars of different
/// fields throws FieldMismatch.
class Scalar {
 public:
  explicit Scalar(FieldSpec field = FieldSpec::rationals());
  Scalar(FieldSpec field, long value);
  Scalar(FieldSpec field, const mpq_class& value);

  static Scalar zero(FieldSpec f) { return Scalar(f); }
  static Scalar one(FieldSpec f) { return Scalar(f, 1L); }
  /// Parses "a", "-a" or "a/b". Throws InvalidInput on malformed text and
  /// DivisionByZero when the denominator vanishes in the field.
  static Scalar parse(FieldSpec f, std::string_view text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Residue in [0, p); only valid over F_p.
  std::uint64_t residue() const;
  /// Exact rational value; only valid over Q.
  const mpq_class& rational() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "2/3", "-1", "4". Residues print in [0, p).
  std::string to_string() const;

 private:
  void check_same_field(const Scalar& o) const;

  FieldSpec field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// The least residue (canonical order 1, 2, ...) of exact multiplicative
/// order n. Over Q only n = 1 (-> 1) and n = 2 (-> -1) exist. Throws
/// NoSuchRoot when the field has no such element (n does not divide p - 1).
Scalar primitive_root_of_unity(const FieldSpec& field, std::uint64_t n);

/// Multiplicative order of a nonzero scalar, or 0 when it is infinite
/// (only possible over Q).
std::uint64_t multiplicative_order(const Scalar& s);

}  // namespace gbihom
