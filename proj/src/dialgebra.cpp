#include "esalg/dialgebra.hpp"

namespace esalg {

Dialgebra::Dialgebra(Algebra left, Algebra right) : left_(std::move(left)), right_(std::move(right)) {
  if (!(left_.field() == right_.field())) throw Error(ErrorKind::FieldMismatch, "dialgebra products over different fields");
  if (left_.dim() != right_.dim()) throw Error(ErrorKind::DimensionMismatch, "dialgebra products of different dimension");
}

Dialgebra Dialgebra::zero(const Field& f, std::size_t dim) { return Dialgebra(Algebra(f, dim), Algebra(f, dim)); }

DiassociativeCheck check_diassociative(const Dialgebra& d) {
  const std::size_t n = d.dim();
  const Algebra& L = d.left();
  const Algebra& R = d.right();
  auto e = [&](std::size_t i) { return unit_vector(d.field(), n, i); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = e(i), y = e(j), z = e(k);
        const Vector xLy = L.basis_product(i, j), xRy = R.basis_product(i, j);
        const Vector yLz = L.basis_product(j, k), yRz = R.basis_product(j, k);
        const std::array<std::pair<Vector, Vector>, 5> sides{{
            {multiply(R, xRy, z), multiply(R, x, yRz)},
            {multiply(L, xLy, z), multiply(L, x, yLz)},
            {multiply(R, xLy, z), multiply(R, x, yRz)},
            {multiply(L, xLy, z), multiply(L, x, yRz)},
            {multiply(L, xRy, z), multiply(R, x, yLz)},
        }};
        for (int ax = 0; ax < 5; ++ax)
          if (sides[ax].first != sides[ax].second)
            return DiassociativeCheck{false, ax + 1, std::array<std::size_t, 3>{i, j, k}};
      }
  return {};
}

Dialgebra embed_associative(const Algebra& a) {
  if (!check_identity(a, IdentityKind::Associative).holds)
    throw Error(ErrorKind::NotAssociative, "only associative algebras embed as dialgebras with equal products");
  return Dialgebra(a, a);
}

Algebra induced_leibniz(const Dialgebra& d) {
  if (!is_diassociative(d)) throw Error(ErrorKind::NotDiassociative, "the five dialgebra axioms do not hold");
  const std::size_t n = d.dim();
  Algebra out(d.field(), n, d.left().basis_names());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        out.set_coeff(i, j, k, d.left().coeff(i, j, k) - d.right().coeff(j, i, k));
  return out;
}

}  // namespace esalg
