// Helpers shared by the unit and acceptance tests. The oracle here is
// deliberately independent of the library's elimination code.
#ifndef ESALG_TESTS_SUPPORT_HPP
#define ESALG_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "esalg/algebra.hpp"
#include "esalg/catalog.hpp"
#include "esalg/io.hpp"

namespace testing {

inline std::string fixture(const std::string& name) { return std::string(ESALG_FIXTURE_DIR) + "/" + name; }

inline std::vector<std::string> fixture_files() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(ESALG_FIXTURE_DIR))
    if (e.path().extension() == ".json") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

inline esalg::Algebra load(const std::string& name) {
  return std::get<esalg::Algebra>(esalg::read_algebra_file(fixture(name)));
}

inline esalg::Algebra make(const std::string& descriptors, const esalg::Field& f = esalg::Field::rationals()) {
  return esalg::make_sum(esalg::parse_descriptors(descriptors, f), f);
}

inline esalg::Scalar random_scalar(std::mt19937_64& rng, const esalg::Field& f, long lo = -3, long hi = 3) {
  std::uniform_int_distribution<long> d(lo, hi);
  return esalg::Scalar::from_int(f, d(rng));
}

inline esalg::Matrix random_matrix(std::mt19937_64& rng, const esalg::Field& f, std::size_t rows, std::size_t cols,
                                   long lo = -3, long hi = 3) {
  esalg::Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(rng, f, lo, hi);
  return m;
}

/// Unit upper times unit lower triangular, so always invertible.
inline esalg::Matrix random_invertible(std::mt19937_64& rng, const esalg::Field& f, std::size_t n) {
  esalg::Matrix u = esalg::Matrix::identity(f, n), l = esalg::Matrix::identity(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      u(i, j) = random_scalar(rng, f, -2, 2);
      l(j, i) = random_scalar(rng, f, -2, 2);
    }
  return u * l;
}

// Naive oracle: dense Gaussian elimination on plain values, over Q when
// p == 0 and over Z/p otherwise (entries kept as residues).

inline mpq_class mod_p(const mpq_class& x, std::uint64_t p) {
  const mpz_class m(static_cast<unsigned long>(p));
  mpz_class num = x.get_num() % m, inv;
  mpz_class den = x.get_den() % m;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  mpz_class r = (num * inv) % m;
  if (r < 0) r += m;
  return mpq_class(r);
}

inline std::size_t oracle_rank(std::vector<std::vector<mpq_class>> m, std::uint64_t p) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  if (p != 0)
    for (auto& row : m)
      for (auto& x : row) x = mod_p(x, p);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      mpq_class factor = m[r][c] / m[rank][c];
      if (p != 0) factor = mod_p(factor, p);
      for (std::size_t k = 0; k < cols; ++k) {
        m[r][k] -= factor * m[rank][k];
        if (p != 0) m[r][k] = mod_p(m[r][k], p);
      }
    }
    ++rank;
  }
  return rank;
}

/// h2 by brute force: one dense cocycle row per basis triple, then
/// nullity minus the rank of the coboundary map.
inline std::size_t oracle_h2(const esalg::Algebra& a, esalg::IdentityKind theory) {
  const std::size_t n = a.dim();
  const std::uint64_t p = a.field().is_rational() ? 0 : a.field().p();
  auto c = [&](std::size_t i, std::size_t j, std::size_t k) -> mpq_class {
    const esalg::Scalar s = a.coeff(i, j, k);
    return p == 0 ? s.rational_value() : mpq_class(static_cast<unsigned long>(s.residue()));
  };
  std::vector<std::vector<mpq_class>> cond;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<mpq_class> row(n * n, 0);
        using esalg::IdentityKind;
        for (std::size_t l = 0; l < n; ++l) {
          switch (theory) {
            case IdentityKind::Associative:
              row[l * n + k] += c(i, j, l);   // f(x_i x_j, x_k)
              row[i * n + l] -= c(j, k, l);   // f(x_i, x_j x_k)
              break;
            case IdentityKind::LeibnizLeft:
              row[i * n + l] += c(j, k, l);   // f(x_i, x_j x_k)
              row[l * n + k] -= c(i, j, l);   // f(x_i x_j, x_k)
              row[l * n + j] += c(i, k, l);   // f(x_i x_k, x_j)
              break;
            case IdentityKind::LeibnizRight:
              row[l * n + k] += c(i, j, l);   // f(x_i x_j, x_k)
              row[i * n + l] -= c(j, k, l);   // f(x_i, x_j x_k)
              row[j * n + l] += c(i, k, l);   // f(x_j, x_i x_k)
              break;
          }
        }
        cond.push_back(row);
      }
  std::vector<std::vector<mpq_class>> cob;
  for (std::size_t l = 0; l < n; ++l) {
    std::vector<mpq_class> row(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) row[i * n + j] = c(i, j, l);
    cob.push_back(row);
  }
  return n * n - oracle_rank(cond, p) - oracle_rank(cob, p);
}

}  // namespace testing

#endif  // ESALG_TESTS_SUPPORT_HPP
