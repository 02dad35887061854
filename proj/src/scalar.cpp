#include "esalg/scalar.hpp"

#include <ostream>

namespace esalg {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::DoesNotSplit: return "DoesNotSplit";
    case ErrorKind::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorKind::NotExtraSpecial: return "NotExtraSpecial";
    case ErrorKind::DegenerateVector: return "DegenerateVector";
    case ErrorKind::UnpairedEigenvalue: return "UnpairedEigenvalue";
    case ErrorKind::IdentityViolated: return "IdentityViolated";
    case ErrorKind::StemFailure: return "StemFailure";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotDiassociative: return "NotDiassociative";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::InvariantFailure: return "InvariantFailure";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DoesNotSplit:
      return 3;
    case ErrorKind::StemFailure:
    case ErrorKind::UnpairedEigenvalue:
    case ErrorKind::InvariantFailure:
      return 4;
    default:
      return 2;
  }
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p == 2) throw Error(ErrorKind::UnsupportedField, "GF(2) is not supported (characteristic 2)");
  if (!is_prime(p)) throw Error(ErrorKind::ParseError, "field modulus " + std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 62)) throw Error(ErrorKind::UnsupportedField, "prime too large");
  return Field(Kind::PrimeField, p);
}

std::string Field::name() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

namespace {

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
  mpz_class m(static_cast<unsigned long>(p));
  mpz_class r = v % m;
  if (r < 0) r += m;
  return r.get_ui();
}

}  // namespace

Scalar Scalar::from_int(const Field& f, long v) {
  return from_rational(f, mpq_class(v));
}

Scalar Scalar::from_rational(const Field& f, const mpq_class& q) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    mpq_class c = q;
    c.canonicalize();
    s.value_ = c;
    return s;
  }
  std::uint64_t num = reduce(q.get_num(), f.p());
  std::uint64_t den = reduce(q.get_den(), f.p());
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "denominator vanishes in " + f.name());
  s.value_ = mod_mul(num, mod_pow(den, f.p() - 2, f.p()), f.p());
  return s;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  return from_rational(Field::rationals(), mpq_class(num, den));
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
  std::string t(text);
  auto bad = [&] { return Error(ErrorKind::ParseError, "invalid scalar '" + t + "'"); };
  if (t.empty()) throw bad();
  auto slash = t.find('/');
  auto check_int = [&](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw bad();
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw bad();
  };
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  check_int(num);
  check_int(den);
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + t + "'");
  return from_rational(f, mpq_class(n, d));
}

bool Scalar::is_zero() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

const mpq_class& Scalar::rational_value() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return *q;
  throw Error(ErrorKind::FieldMismatch, "rational value requested from " + field_.name());
}

std::uint64_t Scalar::residue() const {
  if (auto r = std::get_if<std::uint64_t>(&value_)) return *r;
  throw Error(ErrorKind::FieldMismatch, "residue requested from Q");
}

void Scalar::require_same_field(const Scalar& b) const {
  if (!(field_ == b.field_))
    throw Error(ErrorKind::FieldMismatch, field_.name() + " vs " + b.field_.name());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (auto q = std::get_if<mpq_class>(&r.value_)) {
    *q = -*q;
  } else {
    auto& v = std::get<std::uint64_t>(r.value_);
    v = v == 0 ? 0 : field_.p() - v;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  Scalar r = *this;
  if (auto q = std::get_if<mpq_class>(&r.value_)) {
    *q = 1 / *q;
  } else {
    auto& v = std::get<std::uint64_t>(r.value_);
    v = mod_pow(v, field_.p() - 2, field_.p());
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& b) {
  require_same_field(b);
  if (auto q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(b.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v += std::get<std::uint64_t>(b.value_);
    if (v >= field_.p()) v -= field_.p();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) {
  require_same_field(b);
  if (auto q = std::get_if<mpq_class>(&value_)) {
    *q -= std::get<mpq_class>(b.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    std::uint64_t w = std::get<std::uint64_t>(b.value_);
    v = v >= w ? v - w : v + field_.p() - w;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& b) {
  require_same_field(b);
  if (auto q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(b.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v = mod_mul(v, std::get<std::uint64_t>(b.value_), field_.p());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& b) {
  require_same_field(b);
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (auto q = std::get_if<mpq_class>(&value_)) {
    *q /= std::get<mpq_class>(b.value_);
    return *this;
  }
  return *this *= b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

int canonical_compare(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (auto q = std::get_if<mpq_class>(&a.value_)) {
    const mpq_class& r = std::get<mpq_class>(b.value_);
    int c = cmp(q->get_num(), r.get_num());
    if (c != 0) return c < 0 ? -1 : 1;
    c = cmp(q->get_den(), r.get_den());
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  std::uint64_t x = std::get<std::uint64_t>(a.value_), y = std::get<std::uint64_t>(b.value_);
  return x < y ? -1 : (x > y ? 1 : 0);
}

std::string Scalar::to_string() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace esalg
