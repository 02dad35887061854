#ifndef ESALG_FORMS_HPP
#define ESALG_FORMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "esalg/catalog.hpp"

namespace esalg {

/// Bilinear form B(u, v) = u^T m v of an extra special algebra: on a
/// complement y_1..y_n of the center, y_i y_j = m(i, j) z.
struct BilinearForm {
  Matrix m;
  /// Rows: the complement vectors y_i followed by z, in the source algebra's
  /// coordinates. Absent for forms that were not extracted from an algebra.
  std::optional<Matrix> basis;
};

/// Throws NotExtraSpecial.
BilinearForm form_of(const Algebra& a);

/// Extra special algebra x_i x_j = m(i, j) z on basis x1..xn, z.
Algebra algebra_of(const Matrix& m);

/// m^{-T} m. Throws NotSquare or Singular.
Matrix cosquare(const BilinearForm& f);

struct Regularization {
  BilinearForm regular;                    // invertible, congruent to the regular summand
  std::vector<std::size_t> singular_blocks;  // sizes of the nilpotent Jordan summands, ascending
};

/// Splits a form into its nonsingular summand and the sizes n >= 2 of its
/// singular canonical summands J_n(0) (ones on the superdiagonal), which
/// are the forms of the algebras J(n).
///
/// Each round strips the left and right radicals: with R = ker m,
/// L = ker m^T and V1 = {x : B(R, x) = 0, B(x, L) = 0}, the form on V1
/// modulo its radical is congruent to the regular summand plus J_{k-4}(0)
/// for every J_k(0) with k >= 6. The round's block counts follow from
/// dimensions: #J_2 = rank B|RxL, #J_3 = 2 dim R - codim V1, #J_5 = the
/// radical of B|V1 beyond (R+L) cap V1, #J_4 by subtraction. Every round
/// re-checks the dimension bookkeeping and throws InvariantFailure on a
/// mismatch. Throws DegenerateVector when R cap L != 0 on input.
Regularization regularize(const BilinearForm& f);

/// Multiset of canonical blocks in canonical order; H-blocks carry
/// normalized lambdas.
struct BlockDecomposition {
  std::vector<BlockDescriptor> blocks;

  void sort();
  /// Canonical text form, e.g. `j:2+gamma:3+h2:1/3`.
  std::string to_string() const;
  friend bool operator==(const BlockDecomposition& a, const BlockDecomposition& b);
};

/// Multiset union.
BlockDecomposition operator+(const BlockDecomposition& a, const BlockDecomposition& b);

/// Congruence class of a form as canonical blocks. Singular summands become
/// J(n); a cosquare Jordan block of size n at (-1)^{n+1} becomes Gamma(n)
/// (J(1) when n = 1); the remaining Jordan blocks pair as (n, mu) with
/// (n, 1/mu) into H(n, mu). Throws DoesNotSplit or UnpairedEigenvalue.
BlockDecomposition classify_form(const BilinearForm& f);

/// classify_form(form_of(a)). Throws NotExtraSpecial, DoesNotSplit, UnpairedEigenvalue.
BlockDecomposition classify(const Algebra& a);

}  // namespace esalg

#endif  // ESALG_FORMS_HPP
