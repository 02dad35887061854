#ifndef ESALG_COHOMOLOGY_HPP
#define ESALG_COHOMOLOGY_HPP

#include "esalg/algebra.hpp"

namespace esalg {

/// Second cohomology with trivial coefficients. Bilinear maps f are vectors
/// of length dim^2 with coordinate i*dim + j holding f(x_i, x_j).
struct CocycleSpace {
  std::size_t algebra_dim = 0;
  Subspace z2;  // cocycles
  Subspace b2;  // coboundaries f(x, y) = g(x y)
  std::size_t h2_dim = 0;
};

/// Cocycle conditions over all basis triples:
///   Associative   f(x_i x_j, x_k) = f(x_i, x_j x_k)
///   LeibnizLeft   f(x_i, x_j x_k) = f(x_i x_j, x_k) - f(x_i x_k, x_j)
///   LeibnizRight  f(x_i x_j, x_k) = f(x_i, x_j x_k) - f(x_j, x_i x_k)
/// Throws IdentityViolated when the algebra does not satisfy the identity.
CocycleSpace cocycle_space(const Algebra& a, IdentityKind theory);

/// Dimension of the Schur multiplier, i.e. of H^2(A, F).
std::size_t multiplier_dim(const Algebra& a, IdentityKind theory);

/// The Leibniz orientation whose multipliers match the known extra
/// special Leibniz values; selected by the acceptance suite.
inline constexpr IdentityKind kValidatedLeibniz = IdentityKind::LeibnizLeft;

/// Stem cover K = A (+) M of an associative algebra: basis x_1..x_n of A
/// followed by m_1..m_h, with x_i x_j = (x_i x_j in A) + sum_l f_l(x_i, x_j) m_l
/// and all products involving some m_l zero.
struct CoverExtension {
  Algebra total;
  std::size_t base_dim = 0;
  Subspace kernel;  // span of m_1..m_h inside total

  /// Coordinate projection K -> A.
  Vector project(const Vector& v) const;
  Subspace project(const Subspace& s) const;
};

/// The cocycles f_l span the echelon completion of B^2 inside Z^2. Checks
/// the stem condition and throws StemFailure if it fails; throws
/// NotAssociative for non-associative input.
CoverExtension cover(const Algebra& a);

/// Z*(A): the image of the cover's center.
Subspace z_star(const Algebra& a);

/// Z*(A) = 0.
bool is_capable(const Algebra& a);

/// Z*(A) = Z(A).
bool is_unicentral(const Algebra& a);

}  // namespace esalg

#endif  // ESALG_COHOMOLOGY_HPP
