#include <doctest.h>

#include "esalg/catalog.hpp"
#include "support.hpp"

using namespace esalg;

namespace {

const Field Q = Field::rationals();

// Entries (i, j, s) are x_i x_j = s z with 1-based i, j.
using Table = std::vector<std::tuple<std::size_t, std::size_t, long>>;

Table table_of(const Algebra& a) {
  Table t;
  const std::size_t z = a.dim() - 1;
  for (std::size_t i = 0; i < z; ++i)
    for (std::size_t j = 0; j < z; ++j) {
      const Scalar c = a.coeff(i, j, z);
      if (!c.is_zero()) t.emplace_back(i + 1, j + 1, c.rational_value().get_num().get_si());
      for (std::size_t k = 0; k < z; ++k) CHECK(a.coeff(i, j, k).is_zero());
    }
  for (std::size_t j = 0; j <= z; ++j) {
    CHECK(a.terms(z, j).empty());
    CHECK(a.terms(j, z).empty());
  }
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

TEST_CASE("J tables") {
  const Algebra j1 = make_canonical(BlockDescriptor::j(1), Q);
  CHECK(j1.basis_names() == std::vector<std::string>{"x", "z"});
  CHECK(table_of(j1) == Table{{1, 1, 1}});
  const Algebra j2 = make_canonical(BlockDescriptor::j(2), Q);
  CHECK(j2.dim() == 3);
  CHECK(table_of(j2) == Table{{1, 2, 1}});
  CHECK(table_of(make_canonical(BlockDescriptor::j(4), Q)) == Table{{1, 2, 1}, {2, 3, 1}, {3, 4, 1}});
}

TEST_CASE("Gamma tables against hand expansion") {
  // Gamma_2: x2x1 = z, x2x2 = z, x1x2 = -z
  CHECK(table_of(make_canonical(BlockDescriptor::gamma(2), Q)) == Table{{1, 2, -1}, {2, 1, 1}, {2, 2, 1}});
  // Gamma_3: i = 2: x2x2 = -z, x2x3 = -z; i = 3: x3x1 = z, x3x2 = z; x1x3 = z
  CHECK(table_of(make_canonical(BlockDescriptor::gamma(3), Q)) ==
        Table{{1, 3, 1}, {2, 2, -1}, {2, 3, -1}, {3, 1, 1}, {3, 2, 1}});
  // Gamma_4: i = 2: x2x3 = z, x2x4 = z; i = 3: x3x2 = -z, x3x3 = -z;
  //          i = 4: x4x1 = z, x4x2 = z; x1x4 = -z
  CHECK(table_of(make_canonical(BlockDescriptor::gamma(4), Q)) ==
        Table{{1, 4, -1}, {2, 3, 1}, {2, 4, 1}, {3, 2, -1}, {3, 3, -1}, {4, 1, 1}, {4, 2, 1}});
}

TEST_CASE("H tables") {
  const Algebra h = make_canonical(BlockDescriptor::h(1, Scalar::rational(3)), Q);
  CHECK(h.dim() == 3);
  CHECK(table_of(h) == Table{{1, 2, 1}, {2, 1, 3}});
  // H_4(5): x1x3 = z, x2x4 = z, x3x1 = 5z, x4x2 = 5z, x3x2 = z
  CHECK(table_of(make_canonical(BlockDescriptor::h(2, Scalar::rational(5)), Q)) ==
        Table{{1, 3, 1}, {2, 4, 1}, {3, 1, 5}, {3, 2, 1}, {4, 2, 5}});
}

TEST_CASE("every catalog member is extra special and associative") {
  for (const char* d : {"j:1", "j:3", "j:6", "gamma:2", "gamma:5", "h2:2", "h2:-1", "h2:1/2", "h2n:2:3", "h2n:3:-1",
                        "h2n:3:2"}) {
    CAPTURE(d);
    const Algebra a = testing::make(d);
    CHECK(is_extra_special(a));
    CHECK(check_identity(a, IdentityKind::Associative).holds);
  }
}

TEST_CASE("invalid descriptors") {
  auto kind_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvariantFailure;
  };
  CHECK(kind_of([] { make_canonical(BlockDescriptor::h(1, Scalar::rational(1)), Q); }) == ErrorKind::InvalidDescriptor);
  CHECK(kind_of([] { make_canonical(BlockDescriptor::h(1, Scalar::rational(0)), Q); }) == ErrorKind::InvalidDescriptor);
  CHECK(kind_of([] { make_canonical(BlockDescriptor::h(2, Scalar::rational(-1)), Q); }) ==
        ErrorKind::InvalidDescriptor);
  CHECK(kind_of([] { make_canonical(BlockDescriptor::h(3, Scalar::rational(1)), Q); }) == ErrorKind::InvalidDescriptor);
  CHECK_NOTHROW(make_canonical(BlockDescriptor::h(2, Scalar::rational(1)), Q));
  CHECK(kind_of([] { make_canonical(BlockDescriptor::gamma(1), Q); }) == ErrorKind::InvalidDescriptor);
  CHECK(kind_of([] { make_canonical(BlockDescriptor::j(0), Q); }) == ErrorKind::InvalidDescriptor);
  CHECK(kind_of([] { parse_descriptors("k:3", Q); }) != ErrorKind::InvariantFailure);
  CHECK(kind_of([] { parse_descriptors("j:2+", Q); }) != ErrorKind::InvariantFailure);
}

TEST_CASE("descriptor text") {
  const auto ds = parse_descriptors("j:2+h2:3/2+h2n:2:5+gamma:3", Q);
  REQUIRE(ds.size() == 4);
  CHECK(to_string(ds[0]) == "j:2");
  CHECK(to_string(ds[1]) == "h2:3/2");
  CHECK(to_string(ds[2]) == "h2n:2:5");
  CHECK(to_string(ds[3]) == "gamma:3");
  CHECK(BlockDescriptor::h(1, Scalar::rational(3)) == BlockDescriptor::h(1, Scalar::rational(1, 3)));
  CHECK(!(BlockDescriptor::h(1, Scalar::rational(3)) == BlockDescriptor::h(1, Scalar::rational(2))));
  CHECK(normalize_lambda(Scalar::rational(3)) == Scalar::rational(1, 3));
  CHECK(normalize_lambda(Scalar::rational(-2)) == Scalar::rational(-2));
  CHECK(canonical_less(BlockDescriptor::j(5), BlockDescriptor::gamma(2)));
}

TEST_CASE("central sums") {
  const Algebra s = central_sum(testing::make("j:1"), testing::make("j:1"));
  CHECK(s.dim() == 3);
  CHECK(table_of(s) == Table{{1, 1, 1}, {2, 2, 1}});
  const Algebra t = central_sum(testing::make("j:2"), testing::make("h2:3"));
  CHECK(t.dim() == 5);
  CHECK(is_extra_special(t));
  CHECK_THROWS_AS(central_sum(Algebra(Q, 2), testing::make("j:1")), Error);
  CHECK_THROWS_AS(central_sum(testing::make("j:1"), testing::make("j:1", Field::prime(5))), Error);
  CHECK(testing::make("j:3+gamma:2+h2:2").dim() == 3 + 2 + 2 + 1);
}
