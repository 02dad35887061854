#include <random>

#include <doctest.h>

#include "esalg/algebra.hpp"
#include "esalg/cohomology.hpp"
#include "support.hpp"

using namespace esalg;

namespace {

const Field Q = Field::rationals();

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(Scalar::from_int(Q, x));
  return v;
}

}  // namespace

TEST_CASE("multiply") {
  const Algebra j1 = testing::load("j1.json");
  CHECK(multiply(j1, vec({1, 0}), vec({1, 0})) == vec({0, 1}));
  CHECK(multiply(j1, vec({0, 0}), vec({5, 7})) == vec({0, 0}));
  CHECK(multiply(j1, vec({2, 3}), vec({-1, 4})) == vec({0, -2}));
  const Algebra h = testing::make("h2:3");
  CHECK(multiply(h, vec({0, 1, 0}), vec({1, 0, 0})) == vec({0, 0, 3}));
}

TEST_CASE("sparse storage") {
  Algebra a(Q, 2);
  a.set_coeff(0, 1, 1, Scalar::rational(2));
  CHECK(a.coeff(0, 1, 1) == Scalar::rational(2));
  CHECK(a.terms(0, 1).size() == 1);
  a.set_coeff(0, 1, 1, Scalar::rational(0));
  CHECK(a.terms(0, 1).empty());
  CHECK(a == Algebra(Q, 2));
  CHECK_THROWS_AS(a.set_coeff(0, 2, 0, Scalar::rational(1)), Error);
  CHECK_THROWS_AS(a.set_coeff(0, 0, 0, Scalar::one(Field::prime(5))), Error);
}

TEST_CASE("identity checks") {
  CHECK(check_identity(testing::make("j:5"), IdentityKind::Associative).holds);
  for (IdentityKind k : {IdentityKind::Associative, IdentityKind::LeibnizLeft, IdentityKind::LeibnizRight})
    CHECK(check_identity(Algebra(Q, 3), k).holds);
  const IdentityCheck r = check_identity(testing::load("not_assoc.json"), IdentityKind::Associative);
  CHECK(!r.holds);
  REQUIRE(r.violation);
  CHECK(*r.violation == std::array<std::size_t, 3>{0, 1, 1});
  // x y = x is a left Leibniz algebra that is not right Leibniz
  CHECK(check_identity(testing::load("not_assoc.json"), IdentityKind::LeibnizLeft).holds);
  CHECK(!check_identity(testing::load("not_assoc.json"), IdentityKind::LeibnizRight).holds);
  CHECK(check_identity(testing::load("lie2.json"), IdentityKind::LeibnizRight).holds);
  CHECK(!check_identity(testing::load("split2.json"), IdentityKind::LeibnizLeft).holds);
}

TEST_CASE("derived ideal") {
  const Algebra j2 = testing::make("j:2");
  CHECK(derived_ideal(j2) == Subspace::span(Q, 3, {unit_vector(Q, 3, 2)}));
  CHECK(derived_ideal(Algebra(Q, 3)).dim() == 0);
  // cover of J1: x x = z, x z = z x = m
  const Algebra k = cover(testing::load("j1.json")).total;
  CHECK(derived_ideal(k) == Subspace::span(Q, 3, {unit_vector(Q, 3, 1), unit_vector(Q, 3, 2)}));
  // closure matters: in the unital upper triangular algebra everything is a product
  CHECK(derived_ideal(testing::load("upper2.json")).dim() == 3);
}

TEST_CASE("center") {
  CHECK(center(testing::make("h2:3")) == Subspace::span(Q, 3, {unit_vector(Q, 3, 2)}));
  CHECK(center(Algebra(Q, 2)) == Subspace::full(Q, 2));
  const Algebra k = cover(testing::load("j1.json")).total;
  CHECK(center(k) == Subspace::span(Q, 3, {unit_vector(Q, 3, 2)}));
  CHECK(center(testing::load("upper2.json")).dim() == 0);
  // commutative but not annihilated: center in the two-sided annihilator sense
  CHECK(center(testing::load("trunc3.json")).dim() == 0);
}

TEST_CASE("extra special predicate") {
  CHECK(is_extra_special(testing::make("gamma:4")));
  CHECK(!is_extra_special(Algebra(Q, 3)));
  // J1 (+) J1 without identifying the centers
  Algebra a(Q, 4, {"x1", "z1", "x2", "z2"});
  a.set_coeff(0, 0, 1, Scalar::rational(1));
  a.set_coeff(2, 2, 3, Scalar::rational(1));
  CHECK(center(a).dim() == 2);
  CHECK(!is_extra_special(a));
}

TEST_CASE("change of basis and permutation invariance") {
  std::mt19937_64 rng(23);
  const Algebra a = testing::make("gamma:3+j:2");
  const std::size_t n = a.dim();
  const Matrix p = testing::random_invertible(rng, Q, n);
  const Algebra b = change_basis(a, p);
  CHECK(is_extra_special(b));
  CHECK(change_basis(b, inverse(p)) == a);
  // permuting the basis keeps every predicate
  Matrix perm(Q, n, n);
  for (std::size_t i = 0; i < n; ++i) perm(i, (i + 2) % n) = Scalar::one(Q);
  const Algebra c = change_basis(a, perm);
  CHECK(is_extra_special(c));
  CHECK(center(c).dim() == 1);
  CHECK(check_identity(c, IdentityKind::Associative).holds);
  CHECK_THROWS_AS(change_basis(a, Matrix(Q, n, n)), Error);
}

TEST_CASE("center_last") {
  const Algebra a = testing::make("h2:3");
  Matrix perm(Q, 3, 3);
  perm(0, 2) = perm(1, 0) = perm(2, 1) = Scalar::one(Q);  // z first
  const Algebra shuffled = change_basis(a, perm, {"z", "x1", "x2"});
  const Algebra back = center_last(shuffled);
  CHECK(back.basis_names().back() == "z");
  CHECK(center(back) == Subspace::span(Q, 3, {unit_vector(Q, 3, 2)}));
  CHECK_THROWS_AS(center_last(Algebra(Q, 2)), Error);
}
