#ifndef ESALG_SCALAR_HPP
#define ESALG_SCALAR_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "esalg/errors.hpp"

namespace esalg {

/// The base field: the rationals or a prime field GF(p) with p odd.
class Field {
 public:
  enum class Kind { Rationals, PrimeField };

  static Field rationals() { return Field(Kind::Rationals, 0); }
  /// Throws UnsupportedField for p = 2 and ParseError for p not prime.
  static Field prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  std::uint64_t p() const { return p_; }
  bool is_rational() const { return kind_ == Kind::Rationals; }

  /// "Q" or "GF(p)".
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator; prime field elements as residues 0..p-1.
class Scalar {
 public:
  /// Rational zero.
  Scalar() : field_(Field::rationals()), value_(mpq_class(0)) {}

  static Scalar zero(const Field& f) { return from_int(f, 0); }
  static Scalar one(const Field& f) { return from_int(f, 1); }
  static Scalar from_int(const Field& f, long v);
  static Scalar from_rational(const Field& f, const mpq_class& q);
  static Scalar rational(long num, long den = 1);

  /// Accepts "p", "-p" and "p/q" for every field; over GF(p) a fraction
  /// means p * q^{-1}.
  static Scalar parse(const Field& f, std::string_view text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Rational value; throws FieldMismatch over GF(p).
  const mpq_class& rational_value() const;
  /// Residue in 0..p-1; throws FieldMismatch over Q.
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b);
  Scalar& operator/=(const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Equality is exact; scalars of different fields are never equal.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Fixed total order: (numerator, denominator) lexicographically over Q,
  /// residue order over GF(p). Returns <0, 0, >0.
  friend int canonical_compare(const Scalar& a, const Scalar& b);

  /// "p/q" or "p" over Q, decimal residue over GF(p).
  std::string to_string() const;

 private:
  void require_same_field(const Scalar& b) const;

  Field field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace esalg

#endif  // ESALG_SCALAR_HPP
