#include "esalg/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace esalg {

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(const Field& f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::from_ints(const Field& f, std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t cols = rows.size() ? rows.begin()->size() : 0;
  Matrix m(f, rows.size(), cols);
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    std::size_t j = 0;
    for (long v : r) m(i, j++) = Scalar::from_int(f, v);
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(f, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::col(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

void Matrix::append_row(const Vector& v) {
  if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "row length differs from column count");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "vector length differs from column count");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shapes");
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum shapes");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix difference shapes");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  RrefResult out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j) -= factor * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = a;
  return out;
}

std::size_t rank(const Matrix& m) {
  RowReducer reducer(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) reducer.add(m.row(i));
  return reducer.rank();
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar::one(m.field());
  }
  RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1) throw Error(ErrorKind::Singular, "matrix is not invertible");
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

// ---------------------------------------------------------------------------

RowReducer::RowReducer(const Field& f, std::size_t width) : field_(f), width_(width), owner_(width) {}

bool RowReducer::add(Vector row) {
  if (row.size() != width_) throw Error(ErrorKind::DimensionMismatch, "row width");
  for (std::size_t c = 0; c < width_; ++c) {
    if (row[c].is_zero() || !owner_[c]) continue;
    const Vector& pr = rows_[*owner_[c]];
    Scalar factor = row[c];
    for (std::size_t j = c; j < width_; ++j)
      if (!pr[j].is_zero()) row[j] -= factor * pr[j];
  }
  std::size_t lead = 0;
  while (lead < width_ && row[lead].is_zero()) ++lead;
  if (lead == width_) return false;
  Scalar inv = row[lead].inverse();
  for (std::size_t j = lead; j < width_; ++j)
    if (!row[j].is_zero()) row[j] *= inv;
  owner_[lead] = rows_.size();
  pivot_.push_back(lead);
  rows_.push_back(std::move(row));
  return true;
}

RrefResult RowReducer::result() const {
  // Rows are only reduced against earlier pivots; finish with back substitution.
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivot_[a] < pivot_[b]; });
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;
  for (std::size_t idx : order) {
    rows.push_back(rows_[idx]);
    pivots.push_back(pivot_[idx]);
  }
  for (std::size_t r = rows.size(); r-- > 0;) {
    const std::size_t c = pivots[r];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar factor = rows[i][c];
      for (std::size_t j = c; j < width_; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= factor * rows[r][j];
    }
  }
  RrefResult out;
  out.reduced = Matrix::from_rows(field_, width_, rows);
  out.rank = rows.size();
  out.pivots = std::move(pivots);
  return out;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(RrefResult r) {
  basis_ = Matrix(r.reduced.field(), 0, r.reduced.cols());
  for (std::size_t i = 0; i < r.rank; ++i) basis_.append_row(r.reduced.row(i));
  pivots_ = std::move(r.pivots);
}

Subspace Subspace::zero(const Field& f, std::size_t ambient) { return Subspace(rref(Matrix(f, 0, ambient))); }

Subspace Subspace::full(const Field& f, std::size_t ambient) { return Subspace(rref(Matrix::identity(f, ambient))); }

Subspace Subspace::span(const Field& f, std::size_t ambient, const std::vector<Vector>& vectors) {
  RowReducer reducer(f, ambient);
  for (const auto& v : vectors) reducer.add(v);
  return Subspace(reducer.result());
}

Subspace Subspace::row_space(const Matrix& m) {
  RowReducer reducer(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) reducer.add(m.row(i));
  return Subspace(reducer.result());
}

Vector Subspace::residue(Vector v) const {
  if (v.size() != ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "vector outside ambient space");
  for (std::size_t i = 0; i < dim(); ++i) {
    const std::size_t c = pivots_[i];
    if (v[c].is_zero()) continue;
    Scalar factor = v[c];
    for (std::size_t j = c; j < ambient_dim(); ++j)
      if (!basis_(i, j).is_zero()) v[j] -= factor * basis_(i, j);
  }
  return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero(residue(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.vector(i))) return false;
  return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector coords;
  coords.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) coords.push_back(v[pivots_[i]]);
  return coords;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (ambient_dim() != other.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "subspace sum");
  RowReducer reducer(field(), ambient_dim());
  for (std::size_t i = 0; i < dim(); ++i) reducer.add(vector(i));
  for (std::size_t i = 0; i < other.dim(); ++i) reducer.add(other.vector(i));
  return Subspace(reducer.result());
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_dim() != other.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "subspace intersection");
  // Solve sum_i a_i u_i = sum_j b_j w_j, i.e. the nullspace of [U^T | -W^T].
  const std::size_t n = ambient_dim();
  Matrix sys(field(), n, dim() + other.dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t k = 0; k < n; ++k) sys(k, i) = basis_(i, k);
  for (std::size_t j = 0; j < other.dim(); ++j)
    for (std::size_t k = 0; k < n; ++k) sys(k, dim() + j) = -other.basis_(j, k);
  Subspace sol = nullspace(sys);
  std::vector<Vector> vecs;
  for (std::size_t s = 0; s < sol.dim(); ++s) {
    Vector v = zero_vector(field(), n);
    for (std::size_t i = 0; i < dim(); ++i) {
      const Scalar& a = sol.basis_(s, i);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) v[k] += a * basis_(i, k);
    }
    vecs.push_back(std::move(v));
  }
  return span(field(), n, vecs);
}

bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

Subspace nullspace(const Matrix& m) {
  RowReducer reducer(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) reducer.add(m.row(i));
  RrefResult r = reducer.result();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[free] = Scalar::one(m.field());
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.field(), m.cols(), basis);
}

// ---------------------------------------------------------------------------

Polynomial char_poly(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "characteristic polynomial of a non-square matrix");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  Matrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t p = j + 1;
    while (p < n && h(p, j).is_zero()) ++p;
    if (p == n) continue;
    if (p != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(p, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, p), h(r, j + 1));
    }
    Scalar inv = h(j + 1, j).inverse();
    for (std::size_t i = j + 2; i < n; ++i) {
      if (h(i, j).is_zero()) continue;
      Scalar u = h(i, j) * inv;
      for (std::size_t c = 0; c < n; ++c) h(i, c) -= u * h(j + 1, c);  // row_i -= u row_{j+1}
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) += u * h(r, i);  // col_{j+1} += u col_i
    }
  }
  // p_k(t) = (t - h_kk) p_{k-1}(t) - sum_{i<k} h_ik (prod_{l=i+1..k} h_{l,l-1}) p_{i-1}(t)
  std::vector<Polynomial> p(n + 1);
  p[0] = {Scalar::one(f)};
  for (std::size_t k = 1; k <= n; ++k) {
    Polynomial next(k + 1, Scalar::zero(f));
    for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
      next[d + 1] += p[k - 1][d];
      next[d] -= h(k - 1, k - 1) * p[k - 1][d];
    }
    Scalar prod = Scalar::one(f);
    for (std::size_t i = k - 1; i-- > 0;) {
      prod *= h(i + 1, i);
      if (prod.is_zero()) break;
      Scalar coeff = h(i, k - 1) * prod;
      if (coeff.is_zero()) continue;
      for (std::size_t d = 0; d < p[i].size(); ++d) next[d] -= coeff * p[i][d];
    }
    p[k] = std::move(next);
  }
  return p[n];
}

Scalar evaluate(const Polynomial& p, const Scalar& t) {
  Scalar acc = Scalar::zero(t.field());
  for (std::size_t d = p.size(); d-- > 0;) acc = acc * t + p[d];
  return acc;
}

std::string polynomial_to_string(const Polynomial& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = p.size(); d-- > 0;) {
    if (p[d].is_zero()) continue;
    std::string c = p[d].to_string();
    if (!first) os << " + ";
    first = false;
    if (d == 0) {
      os << c;
    } else {
      if (!p[d].is_one()) os << '(' << c << ")*";
      os << 't';
      if (d > 1) os << '^' << d;
    }
  }
  return first ? "0" : os.str();
}

namespace {

void trim(Polynomial& p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

/// Synthetic division by (t - r); returns the quotient when r is a root.
std::optional<Polynomial> divide_linear(const Polynomial& p, const Scalar& r) {
  if (p.size() < 2) return std::nullopt;
  Polynomial q(p.size() - 1, Scalar::zero(r.field()));
  Scalar carry = Scalar::zero(r.field());
  for (std::size_t d = p.size(); d-- > 1;) {
    carry = carry * r + p[d];
    q[d - 1] = carry;
  }
  if (!(carry * r + p[0]).is_zero()) return std::nullopt;
  return q;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<Scalar> root_candidates(const Polynomial& p) {
  const Field& f = p.front().field();
  std::vector<Scalar> out;
  if (!f.is_rational()) {
    for (std::uint64_t r = 0; r < f.p(); ++r)
      out.push_back(Scalar::from_rational(f, mpq_class(static_cast<unsigned long>(r))));
    return out;
  }
  out.push_back(Scalar::zero(f));
  // Clear denominators; rational roots are +-a/b with a | constant, b | leading.
  mpz_class lcm = 1;
  for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational_value().get_den_mpz_t());
  std::size_t low = 0;
  while (low < p.size() && p[low].is_zero()) ++low;
  if (low + 1 >= p.size()) return out;
  const mpq_class constant_q = p[low].rational_value() * lcm;
  const mpq_class leading_q = p.back().rational_value() * lcm;
  const mpz_class constant = constant_q.get_num();
  const mpz_class leading = leading_q.get_num();
  for (const auto& a : positive_divisors(constant))
    for (const auto& b : positive_divisors(leading)) {
      out.push_back(Scalar::from_rational(f, mpq_class(a, b)));
      out.push_back(Scalar::from_rational(f, mpq_class(-a, b)));
    }
  return out;
}

}  // namespace

RootSplit field_roots(const Polynomial& poly) {
  if (poly.empty()) throw Error(ErrorKind::DimensionMismatch, "empty polynomial");
  Polynomial p = poly;
  trim(p);
  RootSplit out;
  for (const Scalar& r : root_candidates(p)) {
    if (std::any_of(out.roots.begin(), out.roots.end(), [&](const auto& e) { return e.first == r; })) continue;
    std::size_t mult = 0;
    while (auto q = divide_linear(p, r)) {
      p = std::move(*q);
      ++mult;
    }
    if (mult) out.roots.emplace_back(r, mult);
    if (p.size() < 2) break;
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return canonical_compare(a.first, b.first) < 0; });
  out.remainder = std::move(p);
  return out;
}

DoesNotSplit::DoesNotSplit(Polynomial factor)
    : Error(ErrorKind::DoesNotSplit, "characteristic polynomial has the factor " + polynomial_to_string(factor) +
                                         " with no roots in the base field"),
      factor_(std::move(factor)) {}

JordanStructure jordan_structure(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "Jordan structure of a non-square matrix");
  const std::size_t n = m.rows();
  JordanStructure out;
  if (n == 0) return out;
  RootSplit split = field_roots(char_poly(m));
  if (split.remainder.size() > 1) throw DoesNotSplit(split.remainder);
  const Matrix id = Matrix::identity(m.field(), n);
  for (const auto& [mu, mult] : split.roots) {
    Matrix shifted = m;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= mu;
    // ranks[k] = rank((m - mu)^k); blocks of size >= k number ranks[k-1] - ranks[k].
    std::vector<std::size_t> ranks{n};
    Matrix power = id;
    while (ranks.size() <= mult + 1) {
      power = power * shifted;
      ranks.push_back(rank(power));
      if (ranks.back() == ranks[ranks.size() - 2]) break;
    }
    ranks.push_back(ranks.back());
    std::size_t total = 0;
    for (std::size_t k = ranks.size() - 2; k >= 1; --k) {
      std::size_t at_least_k = ranks[k - 1] - ranks[k];
      std::size_t at_least_k1 = ranks[k] - ranks[k + 1];
      for (std::size_t b = 0; b < at_least_k - at_least_k1; ++b) out.blocks.push_back({mu, k});
      total += (at_least_k - at_least_k1) * k;
    }
    if (total != mult)
      throw Error(ErrorKind::InvariantFailure, "Jordan block sizes do not add up to the algebraic multiplicity");
  }
  return out;
}

}  // namespace esalg
