#include "esalg/cohomology.hpp"

namespace esalg {

namespace {

/// Accumulates one linear condition on f as a sparse combination of f(v, w)
/// with v, w ranging over products or basis vectors.
class ConditionRow {
 public:
  ConditionRow(const Algebra& a) : a_(a), row_(zero_vector(a.field(), a.dim() * a.dim())) {}

  /// row += sign * f(u, x_k) for a vector u.
  void add_left_vector(const Vector& u, std::size_t k, bool negate) {
    for (std::size_t i = 0; i < u.size(); ++i)
      if (!u[i].is_zero()) accumulate(i * a_.dim() + k, u[i], negate);
  }
  /// row += sign * f(x_i, u) for a vector u.
  void add_right_vector(std::size_t i, const Vector& u, bool negate) {
    for (std::size_t j = 0; j < u.size(); ++j)
      if (!u[j].is_zero()) accumulate(i * a_.dim() + j, u[j], negate);
  }
  Vector take() { return std::move(row_); }

 private:
  void accumulate(std::size_t idx, const Scalar& v, bool negate) {
    if (negate) {
      row_[idx] -= v;
    } else {
      row_[idx] += v;
    }
  }

  const Algebra& a_;
  Vector row_;
};

}  // namespace

CocycleSpace cocycle_space(const Algebra& a, IdentityKind theory) {
  if (!check_identity(a, theory).holds)
    throw Error(ErrorKind::IdentityViolated, std::string("algebra does not satisfy the ") + to_string(theory) + " identity");
  const std::size_t n = a.dim();
  const std::size_t width = n * n;
  std::vector<Vector> prod(n * n);
  std::vector<bool> nonzero(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      prod[i * n + j] = a.basis_product(i, j);
      nonzero[i * n + j] = !is_zero(prod[i * n + j]);
    }

  RowReducer reducer(a.field(), width);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const bool ij = nonzero[i * n + j], jk = nonzero[j * n + k], ik = nonzero[i * n + k];
        ConditionRow row(a);
        switch (theory) {
          case IdentityKind::Associative:
            if (!ij && !jk) continue;
            row.add_left_vector(prod[i * n + j], k, false);
            row.add_right_vector(i, prod[j * n + k], true);
            break;
          case IdentityKind::LeibnizLeft:
            if (!ij && !jk && !ik) continue;
            row.add_right_vector(i, prod[j * n + k], false);
            row.add_left_vector(prod[i * n + j], k, true);
            row.add_left_vector(prod[i * n + k], j, false);
            break;
          case IdentityKind::LeibnizRight:
            if (!ij && !jk && !ik) continue;
            row.add_left_vector(prod[i * n + j], k, false);
            row.add_right_vector(i, prod[j * n + k], true);
            row.add_right_vector(j, prod[i * n + k], false);
            break;
        }
        Vector v = row.take();
        if (!is_zero(v)) reducer.add(std::move(v));
      }
  RrefResult system = reducer.result();

  // Nullspace of the reduced system.
  std::vector<bool> is_pivot(width, false);
  for (std::size_t p : system.pivots) is_pivot[p] = true;
  std::vector<Vector> cocycles;
  for (std::size_t free = 0; free < width; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(a.field(), width);
    v[free] = Scalar::one(a.field());
    for (std::size_t r = 0; r < system.rank; ++r) v[system.pivots[r]] = -system.reduced(r, free);
    cocycles.push_back(std::move(v));
  }

  // Coboundaries: g = e_k^* gives f(x_i, x_j) = c[i][j][k].
  std::vector<Vector> coboundaries;
  for (std::size_t k = 0; k < n; ++k) {
    Vector v = zero_vector(a.field(), width);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = a.coeff(i, j, k);
    coboundaries.push_back(std::move(v));
  }

  CocycleSpace out;
  out.algebra_dim = n;
  out.z2 = Subspace::span(a.field(), width, cocycles);
  out.b2 = Subspace::span(a.field(), width, coboundaries);
  if (!out.z2.contains(out.b2)) throw Error(ErrorKind::InvariantFailure, "coboundary outside the cocycle space");
  out.h2_dim = out.z2.dim() - out.b2.dim();
  return out;
}

std::size_t multiplier_dim(const Algebra& a, IdentityKind theory) { return cocycle_space(a, theory).h2_dim; }

Vector CoverExtension::project(const Vector& v) const { return Vector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(base_dim)); }

Subspace CoverExtension::project(const Subspace& s) const {
  std::vector<Vector> images;
  for (std::size_t i = 0; i < s.dim(); ++i) images.push_back(project(s.vector(i)));
  return Subspace::span(total.field(), base_dim, images);
}

CoverExtension cover(const Algebra& a) {
  if (!check_identity(a, IdentityKind::Associative).holds)
    throw Error(ErrorKind::NotAssociative, "cover needs an associative algebra");
  const CocycleSpace cs = cocycle_space(a, IdentityKind::Associative);
  const std::size_t n = a.dim();
  const Field& f = a.field();

  // Echelon completion: cocycles reduced modulo B^2, then echelonized.
  std::vector<Vector> residues;
  for (std::size_t i = 0; i < cs.z2.dim(); ++i) residues.push_back(cs.b2.residue(cs.z2.vector(i)));
  const Subspace complement = Subspace::span(f, n * n, residues);
  if (complement.dim() != cs.h2_dim) throw Error(ErrorKind::InvariantFailure, "complement of B^2 has the wrong dimension");

  const std::size_t h = complement.dim();
  std::vector<std::string> names = a.basis_names();
  for (std::size_t l = 1; l <= h; ++l) names.push_back(h == 1 ? "m" : "m" + std::to_string(l));
  CoverExtension out;
  out.base_dim = n;
  out.total = Algebra(f, n + h, names);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out.total.set_coeff(i, j, k, a.coeff(i, j, k));
      for (std::size_t l = 0; l < h; ++l) out.total.set_coeff(i, j, n + l, complement.basis()(l, i * n + j));
    }
  std::vector<Vector> kernel;
  for (std::size_t l = 0; l < h; ++l) kernel.push_back(unit_vector(f, n + h, n + l));
  out.kernel = Subspace::span(f, n + h, kernel);

  if (!center(out.total).contains(out.kernel))
    throw Error(ErrorKind::StemFailure, "multiplier is not central in the cover");
  if (!derived_ideal(out.total).contains(out.kernel))
    throw Error(ErrorKind::StemFailure, "multiplier is not inside the derived ideal of the cover");
  return out;
}

Subspace z_star(const Algebra& a) {
  const CoverExtension k = cover(a);
  return k.project(center(k.total));
}

bool is_capable(const Algebra& a) { return z_star(a).dim() == 0; }

bool is_unicentral(const Algebra& a) { return z_star(a) == center(a); }

}  // namespace esalg
