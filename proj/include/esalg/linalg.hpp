#ifndef ESALG_LINALG_HPP
#define ESALG_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "esalg/scalar.hpp"

namespace esalg {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() : field_(Field::rationals()) {}
  Matrix(const Field& f, std::size_t rows, std::size_t cols);

  /// Rows of integers, mostly for tests and fixtures.
  static Matrix from_ints(const Field& f, std::initializer_list<std::initializer_list<long>> rows);
  static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix identity(const Field& f, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  void append_row(const Vector& v);

  Matrix transpose() const;
  Vector apply(const Vector& v) const;  // this * v

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Inverse of a square matrix. Throws NotSquare or Singular.
Matrix inverse(const Matrix& m);

/// Incremental Gauss-Jordan elimination over rows of fixed width. Rows are
/// reduced as they arrive, so a tall sparse system never has to be stored.
class RowReducer {
 public:
  RowReducer(const Field& f, std::size_t width);

  /// Returns true when the row was independent of the rows seen so far.
  bool add(Vector row);
  std::size_t rank() const { return rows_.size(); }
  /// Reduced row echelon form of everything added so far.
  RrefResult result() const;

 private:
  Field field_;
  std::size_t width_;
  std::vector<Vector> rows_;        // each with a leading 1 at pivot_[i]
  std::vector<std::size_t> pivot_;
  std::vector<std::optional<std::size_t>> owner_;  // column -> row index
};

/// A subspace of F^n kept as a matrix in reduced row echelon form.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(const Field& f, std::size_t ambient);
  static Subspace full(const Field& f, std::size_t ambient);
  static Subspace span(const Field& f, std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace row_space(const Matrix& m);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vector vector(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in this subspace's basis; nullopt when v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;
  /// Reduces v against the echelon basis; zero exactly when v is inside.
  Vector residue(Vector v) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  explicit Subspace(RrefResult r);

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Basis of {v : m v = 0}.
Subspace nullspace(const Matrix& m);

/// Polynomials are coefficient lists, lowest degree first.
using Polynomial = std::vector<Scalar>;

/// Monic characteristic polynomial det(tI - m), computed through a
/// Hessenberg reduction (valid in every characteristic). Throws NotSquare.
Polynomial char_poly(const Matrix& m);

Scalar evaluate(const Polynomial& p, const Scalar& t);
std::string polynomial_to_string(const Polynomial& p);

/// Roots in the base field with algebraic multiplicities, plus the cofactor
/// that has no roots in the field (degree 0 when the polynomial splits).
struct RootSplit {
  std::vector<std::pair<Scalar, std::size_t>> roots;
  Polynomial remainder;
};
RootSplit field_roots(const Polynomial& p);

struct JordanBlock {
  Scalar eigenvalue;
  std::size_t size;
  friend bool operator==(const JordanBlock&, const JordanBlock&) = default;
};

/// Segre characteristic of a square matrix whose characteristic polynomial
/// splits over the base field. Blocks are ordered by eigenvalue (canonical
/// order) and then by decreasing size.
struct JordanStructure {
  std::vector<JordanBlock> blocks;
};

/// Thrown by jordan_structure when the characteristic polynomial has an
/// irreducible factor of degree > 1 over the base field.
class DoesNotSplit : public Error {
 public:
  explicit DoesNotSplit(Polynomial factor);
  const Polynomial& factor() const { return factor_; }

 private:
  Polynomial factor_;
};

JordanStructure jordan_structure(const Matrix& m);

}  // namespace esalg

#endif  // ESALG_LINALG_HPP
