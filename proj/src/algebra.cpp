#include "esalg/algebra.hpp"

#include <algorithm>
#include <map>

namespace esalg {

Algebra::Algebra(const Field& f, std::size_t dim, std::vector<std::string> names)
    : field_(f), dim_(dim), terms_(dim * dim) {
  if (names.empty()) {
    for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  }
  set_basis_names(std::move(names));
}

void Algebra::set_basis_names(std::vector<std::string> names) {
  if (names.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "basis name count differs from dimension");
  names_ = std::move(names);
}

Scalar Algebra::coeff(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& t : terms_[i * dim_ + j])
    if (t.k == k) return t.c;
  return Scalar::zero(field_);
}

void Algebra::set_coeff(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw Error(ErrorKind::DimensionMismatch, "structure constant index");
  if (!(value.field() == field_)) throw Error(ErrorKind::FieldMismatch, "structure constant field");
  auto& list = terms_[i * dim_ + j];
  auto it = std::lower_bound(list.begin(), list.end(), k, [](const Term& t, std::size_t key) { return t.k < key; });
  if (it != list.end() && it->k == k) {
    if (value.is_zero()) {
      list.erase(it);
    } else {
      it->c = value;
    }
  } else if (!value.is_zero()) {
    list.insert(it, Term{k, value});
  }
}

void Algebra::set_product(std::size_t i, std::size_t j, const Vector& value) {
  if (value.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "product vector length");
  auto& list = terms_.at(i * dim_ + j);
  list.clear();
  for (std::size_t k = 0; k < dim_; ++k) {
    if (!(value[k].field() == field_)) throw Error(ErrorKind::FieldMismatch, "structure constant field");
    if (!value[k].is_zero()) list.push_back(Term{k, value[k]});
  }
}

Vector Algebra::basis_product(std::size_t i, std::size_t j) const {
  Vector v = zero_vector(field_, dim_);
  for (const auto& t : terms_[i * dim_ + j]) v[t.k] = t.c;
  return v;
}

Vector multiply(const Algebra& a, const Vector& u, const Vector& v) {
  const std::size_t n = a.dim();
  if (u.size() != n || v.size() != n) throw Error(ErrorKind::DimensionMismatch, "multiply: vector length");
  Vector out = zero_vector(a.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero()) continue;
      const auto& terms = a.terms(i, j);
      if (terms.empty()) continue;
      Scalar uv = u[i] * v[j];
      for (const auto& t : terms) out[t.k] += uv * t.c;
    }
  }
  return out;
}

const char* to_string(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::Associative: return "assoc";
    case IdentityKind::LeibnizLeft: return "leibniz-left";
    case IdentityKind::LeibnizRight: return "leibniz-right";
  }
  return "unknown";
}

namespace {

/// (sum_k v_k x_k) * x_j
Vector times_basis_right(const Algebra& a, const Vector& v, std::size_t j) {
  Vector out = zero_vector(a.field(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (v[i].is_zero()) continue;
    for (const auto& t : a.terms(i, j)) out[t.k] += v[i] * t.c;
  }
  return out;
}

/// x_i * (sum_k v_k x_k)
Vector times_basis_left(const Algebra& a, std::size_t i, const Vector& v) {
  Vector out = zero_vector(a.field(), a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& t : a.terms(i, j)) out[t.k] += v[j] * t.c;
  }
  return out;
}

Vector sub(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

}  // namespace

IdentityCheck check_identity(const Algebra& a, IdentityKind kind) {
  const std::size_t n = a.dim();
  std::vector<Vector> prod(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = a.basis_product(i, j);
  auto p = [&](std::size_t i, std::size_t j) -> const Vector& { return prod[i * n + j]; };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs, rhs;
        switch (kind) {
          case IdentityKind::Associative:
            lhs = times_basis_right(a, p(i, j), k);
            rhs = times_basis_left(a, i, p(j, k));
            break;
          case IdentityKind::LeibnizLeft:
            lhs = times_basis_left(a, i, p(j, k));
            rhs = sub(times_basis_right(a, p(i, j), k), times_basis_right(a, p(i, k), j));
            break;
          case IdentityKind::LeibnizRight:
            lhs = times_basis_right(a, p(i, j), k);
            rhs = sub(times_basis_left(a, i, p(j, k)), times_basis_left(a, j, p(i, k)));
            break;
        }
        if (lhs != rhs) return IdentityCheck{false, std::array<std::size_t, 3>{i, j, k}};
      }
  return {};
}

Subspace derived_ideal(const Algebra& a) {
  const std::size_t n = a.dim();
  // Basis vectors that multiply something nontrivially from the left / right.
  std::vector<std::size_t> acts_left, acts_right;
  std::vector<Vector> pending;
  for (std::size_t i = 0; i < n; ++i) {
    bool left = false, right = false;
    for (std::size_t j = 0; j < n; ++j) {
      left = left || !a.terms(i, j).empty();
      right = right || !a.terms(j, i).empty();
      if (!a.terms(i, j).empty()) pending.push_back(a.basis_product(i, j));
    }
    if (left) acts_left.push_back(i);
    if (right) acts_right.push_back(i);
  }
  RowReducer reducer(a.field(), n);
  // Every vector that enlarges the span is multiplied by the basis on both sides.
  while (!pending.empty()) {
    Vector v = std::move(pending.back());
    pending.pop_back();
    if (!reducer.add(v)) continue;
    for (std::size_t i : acts_left) {
      Vector left = times_basis_left(a, i, v);
      if (!is_zero(left)) pending.push_back(std::move(left));
    }
    for (std::size_t i : acts_right) {
      Vector right = times_basis_right(a, v, i);
      if (!is_zero(right)) pending.push_back(std::move(right));
    }
  }
  const RrefResult r = reducer.result();
  return Subspace::row_space(r.reduced);
}

Subspace center(const Algebra& a) {
  const std::size_t n = a.dim();
  // Unknown v; equations (v x_q)_k = sum_p v_p c[p][q][k] = 0 and (x_p v)_k = sum_q v_q c[p][q][k] = 0,
  // collected sparsely since most of the 2n^2 equations are empty.
  std::map<std::size_t, std::map<std::size_t, Scalar>> eqs;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (const auto& t : a.terms(p, q)) {
        auto add = [&](std::size_t row, std::size_t col) {
          auto& r = eqs[row];
          auto it = r.find(col);
          if (it == r.end()) {
            r.emplace(col, t.c);
          } else {
            it->second += t.c;
          }
        };
        add(q * n + t.k, p);
        add(n * n + p * n + t.k, q);
      }
  RowReducer reducer(a.field(), n);
  for (const auto& [row, entries] : eqs) {
    Vector v = zero_vector(a.field(), n);
    for (const auto& [col, c] : entries) v[col] = c;
    if (!is_zero(v)) reducer.add(std::move(v));
    if (reducer.rank() == n) break;
  }
  return nullspace(reducer.result().reduced);
}

bool is_extra_special(const Algebra& a) {
  Subspace z = center(a);
  if (z.dim() != 1) return false;
  return derived_ideal(a) == z;
}

Algebra change_basis(const Algebra& a, const Matrix& basis, std::vector<std::string> names) {
  const std::size_t n = a.dim();
  if (basis.rows() != n || basis.cols() != n) throw Error(ErrorKind::DimensionMismatch, "change of basis shape");
  // A vector w (old coordinates) has new coordinates w * B^{-1}.
  const Matrix back = inverse(basis).transpose();
  Algebra out(a.field(), n, std::move(names));
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(basis.row(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set_product(i, j, back.apply(multiply(a, rows[i], rows[j])));
  return out;
}

Algebra center_last(const Algebra& a) {
  if (!is_extra_special(a)) throw Error(ErrorKind::NotExtraSpecial, "algebra is not extra special");
  const std::size_t n = a.dim();
  Subspace z = center(a);
  const std::size_t pivot = z.pivots().front();
  Matrix basis(a.field(), 0, n);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == pivot) continue;
    basis.append_row(unit_vector(a.field(), n, k));
    names.push_back(a.basis_names()[k]);
  }
  Vector zv = z.vector(0);
  basis.append_row(zv);
  names.push_back(zv == unit_vector(a.field(), n, pivot) ? a.basis_names()[pivot] : "z");
  return change_basis(a, basis, std::move(names));
}

}  // namespace esalg
