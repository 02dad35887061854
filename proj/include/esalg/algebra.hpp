#ifndef ESALG_ALGEBRA_HPP
#define ESALG_ALGEBRA_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "esalg/linalg.hpp"

namespace esalg {

/// Finite-dimensional algebra given by structure constants: the product of
/// basis vectors i and j has coefficient coeff(i, j, k) on basis vector k.
/// Only nonzero constants are stored.
class Algebra {
 public:
  struct Term {
    std::size_t k;
    Scalar c;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Algebra() = default;
  /// Zero algebra; basis names default to e1..en.
  Algebra(const Field& f, std::size_t dim, std::vector<std::string> names = {});

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  void set_basis_names(std::vector<std::string> names);

  Scalar coeff(std::size_t i, std::size_t j, std::size_t k) const;
  void set_coeff(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);
  /// Sets the whole product x_i x_j.
  void set_product(std::size_t i, std::size_t j, const Vector& value);
  Vector basis_product(std::size_t i, std::size_t j) const;
  /// Nonzero terms of x_i x_j, ordered by k.
  const std::vector<Term>& terms(std::size_t i, std::size_t j) const { return terms_[i * dim_ + j]; }

  /// Same structure constants, ignoring names.
  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  Field field_ = Field::rationals();
  std::size_t dim_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<Term>> terms_;
};

/// Bilinear extension of the structure tensor.
Vector multiply(const Algebra& a, const Vector& u, const Vector& v);

enum class IdentityKind {
  Associative,   // (x_i x_j) x_k = x_i (x_j x_k)
  LeibnizLeft,   // x_i (x_j x_k) = (x_i x_j) x_k - (x_i x_k) x_j
  LeibnizRight,  // (x_i x_j) x_k = x_i (x_j x_k) - x_j (x_i x_k)
};

const char* to_string(IdentityKind kind);

struct IdentityCheck {
  bool holds = true;
  std::optional<std::array<std::size_t, 3>> violation;  // first failing basis triple
};

/// Exhaustive over basis triples, which suffices by multilinearity.
IdentityCheck check_identity(const Algebra& a, IdentityKind kind);

/// Span of all products, closed under multiplication by the algebra on both sides.
Subspace derived_ideal(const Algebra& a);

/// Two-sided annihilator {v : v x = x v = 0 for all x}.
Subspace center(const Algebra& a);

/// Z(A) = A' and dim Z(A) = 1.
bool is_extra_special(const Algebra& a);

/// Structure constants in a new basis. Rows of `basis` are the new basis
/// vectors in old coordinates; throws Singular if they are not a basis.
Algebra change_basis(const Algebra& a, const Matrix& basis, std::vector<std::string> names = {});

/// An isomorphic copy of an extra special algebra whose last basis vector
/// spans the center; the other basis vectors are old basis vectors outside
/// the center's pivot, so their products are multiples of the last one.
/// Throws NotExtraSpecial.
Algebra center_last(const Algebra& a);

}  // namespace esalg

#endif  // ESALG_ALGEBRA_HPP
