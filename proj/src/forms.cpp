#include "esalg/forms.hpp"

#include <algorithm>
#include <map>

namespace esalg {

BilinearForm form_of(const Algebra& a) {
  if (!is_extra_special(a)) throw Error(ErrorKind::NotExtraSpecial, "form_of needs an extra special algebra");
  const std::size_t n = a.dim() - 1;
  const Subspace z = center(a);
  const std::size_t pivot = z.pivots().front();
  // z has a 1 at its pivot; complement = the remaining unit vectors.
  Matrix basis(a.field(), 0, a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (k != pivot) basis.append_row(unit_vector(a.field(), a.dim(), k));
  basis.append_row(z.vector(0));

  Matrix m(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector p = multiply(a, basis.row(i), basis.row(j));
      m(i, j) = p[pivot];
    }
  return {m, basis};
}

Algebra algebra_of(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "form matrix must be square");
  const std::size_t n = m.rows();
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  names.push_back("z");
  Algebra a(m.field(), n + 1, names);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.set_coeff(i, j, n, m(i, j));
  return a;
}

Matrix cosquare(const BilinearForm& f) {
  if (!f.m.is_square()) throw Error(ErrorKind::NotSquare, "cosquare of a non-square form");
  return inverse(f.m.transpose()) * f.m;
}

namespace {

/// Rows of `s` as a matrix whose product with m gives the functionals u -> B(s_i, u).
Matrix gram(const Matrix& rows_a, const Matrix& m, const Matrix& rows_b) {
  return rows_a * m * rows_b.transpose();
}

Matrix stack(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  for (std::size_t i = 0; i < b.rows(); ++i) out.append_row(b.row(i));
  return out;
}

/// Two-sided radical {x : B(x, .) = 0 and B(., x) = 0}.
Subspace radical(const Matrix& m) { return nullspace(stack(m, m.transpose())); }

void audit(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvariantFailure, "regularize: " + what);
}

}  // namespace

Regularization regularize(const BilinearForm& f) {
  if (!f.m.is_square()) throw Error(ErrorKind::NotSquare, "regularize needs a square form");
  const Field& field = f.m.field();
  if (radical(f.m).dim() != 0)
    throw Error(ErrorKind::DegenerateVector, "a nonzero vector annihilates the form on both sides");

  Regularization out;
  Matrix m = f.m;
  for (std::size_t round = 0;; ++round) {
    const std::size_t k = m.rows();
    const Subspace right = nullspace(m);
    const Subspace left = nullspace(m.transpose());
    const std::size_t r = right.dim();
    audit(left.dim() == r, "left and right radicals differ in dimension");
    if (r == 0) break;
    audit(radical(m).dim() == 0, "radical survived the previous round");

    const std::size_t c2 = rank(gram(right.basis(), m, left.basis()));
    const Matrix functionals = stack(right.basis() * m, (m * left.basis().transpose()).transpose());
    const Subspace v1 = nullspace(functionals);
    const std::size_t codim = k - v1.dim();
    audit(codim <= 2 * r, "V1 codimension exceeds 2 dim R");
    const std::size_t c3 = 2 * r - codim;

    const Matrix g = gram(v1.basis(), m, v1.basis());
    const Subspace rad = radical(g);
    const std::size_t edges = (right + left).intersect(v1).dim();
    audit(edges == 2 * (r - c2), "(R + L) cap V1 has unexpected dimension");
    audit(rad.dim() >= edges, "radical of the restricted form is too small");
    const std::size_t c5 = rad.dim() - edges;

    // Quotient by the radical: keep the unit vectors of V1 off the radical's pivots.
    std::vector<bool> dropped(g.rows(), false);
    for (std::size_t p : rad.pivots()) dropped[p] = true;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < g.rows(); ++i)
      if (!dropped[i]) keep.push_back(i);
    Matrix next(field, keep.size(), keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j) next(i, j) = g(keep[i], keep[j]);

    const std::size_t longer = nullspace(next).dim();  // blocks of reduced size >= 6
    audit(r >= c2 + c3 + c5 + longer, "block counts exceed dim R");
    const std::size_t c4 = r - c2 - c3 - c5 - longer;
    audit(next.rows() + 2 * c2 + 3 * c3 + 4 * c4 + 5 * c5 + 4 * longer == k, "dimension bookkeeping");

    const std::size_t shift = 4 * round;
    for (std::size_t i = 0; i < c2; ++i) out.singular_blocks.push_back(2 + shift);
    for (std::size_t i = 0; i < c3; ++i) out.singular_blocks.push_back(3 + shift);
    for (std::size_t i = 0; i < c4; ++i) out.singular_blocks.push_back(4 + shift);
    for (std::size_t i = 0; i < c5; ++i) out.singular_blocks.push_back(5 + shift);
    m = std::move(next);
  }
  std::sort(out.singular_blocks.begin(), out.singular_blocks.end());
  std::size_t singular_total = 0;
  for (std::size_t s : out.singular_blocks) singular_total += s;
  audit(singular_total + m.rows() == f.m.rows(), "sizes do not add up");
  out.regular = BilinearForm{m, std::nullopt};
  return out;
}

void BlockDecomposition::sort() { std::stable_sort(blocks.begin(), blocks.end(), canonical_less); }

std::string BlockDecomposition::to_string() const {
  std::string s;
  for (const auto& b : blocks) s += (s.empty() ? "" : "+") + esalg::to_string(b);
  return s;
}

bool operator==(const BlockDecomposition& a, const BlockDecomposition& b) {
  if (a.blocks.size() != b.blocks.size()) return false;
  BlockDecomposition x = a, y = b;
  x.sort();
  y.sort();
  return std::equal(x.blocks.begin(), x.blocks.end(), y.blocks.begin());
}

BlockDecomposition operator+(const BlockDecomposition& a, const BlockDecomposition& b) {
  BlockDecomposition out = a;
  out.blocks.insert(out.blocks.end(), b.blocks.begin(), b.blocks.end());
  out.sort();
  return out;
}

BlockDecomposition classify_form(const BilinearForm& f) {
  const Field& field = f.m.field();
  Regularization reg = regularize(f);
  BlockDecomposition out;
  for (std::size_t s : reg.singular_blocks) out.blocks.push_back(BlockDescriptor::j(s));

  if (reg.regular.m.rows() > 0) {
    JordanStructure js = jordan_structure(cosquare(reg.regular));
    // (size, normalized eigenvalue string) -> counts at mu and at 1/mu
    struct Tally {
      Scalar rep;
      std::size_t at_rep = 0;
      std::size_t at_inverse = 0;
    };
    std::map<std::pair<std::size_t, std::string>, Tally> pending;
    for (const auto& block : js.blocks) {
      const Scalar sign = Scalar::from_int(field, block.size % 2 == 1 ? 1 : -1);  // (-1)^{n+1}
      if (block.eigenvalue == sign) {
        out.blocks.push_back(block.size == 1 ? BlockDescriptor::j(1) : BlockDescriptor::gamma(block.size));
        continue;
      }
      const Scalar rep = normalize_lambda(block.eigenvalue);
      auto& t = pending.try_emplace({block.size, rep.to_string()}, Tally{rep}).first->second;
      if (block.eigenvalue == rep) {
        ++t.at_rep;
      } else {
        ++t.at_inverse;
      }
    }
    for (const auto& [key, t] : pending) {
      const bool self_inverse = t.rep == t.rep.inverse();
      const std::size_t total = t.at_rep + t.at_inverse;
      const bool balanced = self_inverse ? total % 2 == 0 : t.at_rep == t.at_inverse;
      if (!balanced)
        throw Error(ErrorKind::UnpairedEigenvalue, "Jordan blocks of size " + std::to_string(key.first) + " at " +
                                                       t.rep.to_string() + " do not pair with their inverses");
      for (std::size_t i = 0; i < total / 2; ++i) out.blocks.push_back(BlockDescriptor::h(key.first, t.rep));
    }
  }
  out.sort();
  return out;
}

BlockDecomposition classify(const Algebra& a) { return classify_form(form_of(a)); }

}  // namespace esalg
