#include "esalg/catalog.hpp"

#include <algorithm>

namespace esalg {

std::size_t BlockDescriptor::algebra_dim() const {
  return kind == BlockKind::H ? 2 * n + 1 : n + 1;
}

void BlockDescriptor::validate(const Field& f) const {
  auto bad = [&](const std::string& why) { return Error(ErrorKind::InvalidDescriptor, to_string(*this) + ": " + why); };
  switch (kind) {
    case BlockKind::J:
      if (n < 1) throw bad("J needs n >= 1");
      if (lambda) throw bad("J takes no lambda");
      return;
    case BlockKind::Gamma:
      if (n < 2) throw bad("Gamma needs n >= 2");
      if (lambda) throw bad("Gamma takes no lambda");
      return;
    case BlockKind::H: {
      if (n < 1) throw bad("H needs n >= 1");
      if (!lambda) throw bad("H needs lambda");
      if (!(lambda->field() == f)) throw bad("lambda lies in " + lambda->field().name() + ", not " + f.name());
      if (lambda->is_zero()) throw bad("lambda must be nonzero");
      Scalar forbidden = Scalar::from_int(f, n % 2 == 1 ? 1 : -1);  // (-1)^{n+1}
      if (*lambda == forbidden) throw bad("lambda must differ from " + forbidden.to_string());
      return;
    }
  }
}

Scalar normalize_lambda(const Scalar& lambda) {
  Scalar inv = lambda.inverse();
  return canonical_compare(inv, lambda) < 0 ? inv : lambda;
}

bool operator==(const BlockDescriptor& a, const BlockDescriptor& b) {
  if (a.kind != b.kind || a.n != b.n) return false;
  if (a.kind != BlockKind::H) return true;
  if (!a.lambda || !b.lambda) return !a.lambda && !b.lambda;
  if (!(a.lambda->field() == b.lambda->field())) return false;
  return normalize_lambda(*a.lambda) == normalize_lambda(*b.lambda);
}

bool canonical_less(const BlockDescriptor& a, const BlockDescriptor& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  if (a.n != b.n) return a.n < b.n;
  if (a.kind != BlockKind::H || !a.lambda || !b.lambda) return false;
  return canonical_compare(normalize_lambda(*a.lambda), normalize_lambda(*b.lambda)) < 0;
}

std::string to_string(const BlockDescriptor& d) {
  switch (d.kind) {
    case BlockKind::J: return "j:" + std::to_string(d.n);
    case BlockKind::Gamma: return "gamma:" + std::to_string(d.n);
    case BlockKind::H: {
      std::string l = d.lambda ? d.lambda->to_string() : "?";
      return d.n == 1 ? "h2:" + l : "h2n:" + std::to_string(d.n) + ":" + l;
    }
  }
  return "?";
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    parts.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

std::size_t parse_size(const std::string& s, const std::string& context) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) || s.size() > 6)
    throw Error(ErrorKind::ParseError, "bad block size '" + s + "' in '" + context + "'");
  return std::stoul(s);
}

std::string trim(std::string s) {
  auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!s.empty() && ws(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && ws(s[i])) ++i;
  return s.substr(i);
}

}  // namespace

std::vector<BlockDescriptor> parse_descriptors(std::string_view text, const Field& f) {
  std::vector<BlockDescriptor> out;
  for (std::string term : split(text, '+')) {
    term = trim(term);
    auto parts = split(term, ':');
    std::string kind = parts[0];
    std::transform(kind.begin(), kind.end(), kind.begin(), [](unsigned char c) { return std::tolower(c); });
    BlockDescriptor d;
    if (kind == "j" && parts.size() == 2) {
      d = BlockDescriptor::j(parse_size(parts[1], term));
    } else if (kind == "gamma" && parts.size() == 2) {
      d = BlockDescriptor::gamma(parse_size(parts[1], term));
    } else if (kind == "h2" && parts.size() == 2) {
      d = BlockDescriptor::h(1, Scalar::parse(f, parts[1]));
    } else if (kind == "h2n" && parts.size() == 3) {
      d = BlockDescriptor::h(parse_size(parts[1], term), Scalar::parse(f, parts[2]));
    } else {
      throw Error(ErrorKind::ParseError, "unrecognized block descriptor '" + term + "'");
    }
    d.validate(f);
    out.push_back(std::move(d));
  }
  return out;
}

Algebra make_canonical(const BlockDescriptor& d, const Field& f) {
  d.validate(f);
  const std::size_t m = d.algebra_dim() - 1;  // number of non-central basis vectors
  std::vector<std::string> names;
  if (m == 1) {
    names.push_back("x");
  } else {
    for (std::size_t i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
  }
  names.push_back("z");
  Algebra a(f, m + 1, names);
  const std::size_t z = m;
  // 1-based helper: x_i x_j = s z
  auto put = [&](std::size_t i, std::size_t j, long s) { a.set_coeff(i - 1, j - 1, z, Scalar::from_int(f, s)); };
  auto sign = [](long e) { return e % 2 == 0 ? 1L : -1L; };
  const std::size_t n = d.n;

  switch (d.kind) {
    case BlockKind::J:
      if (n == 1) {
        put(1, 1, 1);
      } else {
        for (std::size_t i = 1; i < n; ++i) put(i, i + 1, 1);
      }
      break;
    case BlockKind::Gamma: {
      const long nn = static_cast<long>(n);
      for (long i = 2; i <= nn; ++i) {
        put(i, nn - i + 1, sign(nn - i));  // x_n x_1 = z, x_{n-1} x_2 = -z, ...
        put(i, nn - i + 2, sign(nn - i));  // x_n x_2 = z, x_{n-1} x_3 = -z, ...
      }
      put(1, n, sign(nn + 1));
      break;
    }
    case BlockKind::H:
      if (n == 1) {
        put(1, 2, 1);
        a.set_coeff(1, 0, z, *d.lambda);
      } else {
        for (std::size_t i = 1; i <= n; ++i) {
          put(i, n + i, 1);
          a.set_coeff(n + i - 1, i - 1, z, *d.lambda);
        }
        for (std::size_t i = 1; i < n; ++i) put(n + i, i + 1, 1);
      }
      break;
  }
  return a;
}

Algebra central_sum(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "central sum over different fields");
  Algebra ca = center_last(a);
  Algebra cb = center_last(b);
  const std::size_t ma = a.dim() - 1, mb = b.dim() - 1, n = ma + mb + 1, z = n - 1;
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= ma + mb; ++i) names.push_back("x" + std::to_string(i));
  names.push_back("z");
  Algebra out(a.field(), n, names);
  for (std::size_t i = 0; i < ma; ++i)
    for (std::size_t j = 0; j < ma; ++j) out.set_coeff(i, j, z, ca.coeff(i, j, ma));
  for (std::size_t i = 0; i < mb; ++i)
    for (std::size_t j = 0; j < mb; ++j) out.set_coeff(ma + i, ma + j, z, cb.coeff(i, j, mb));
  return out;
}

Algebra make_sum(const std::vector<BlockDescriptor>& blocks, const Field& f) {
  if (blocks.empty()) throw Error(ErrorKind::InvalidDescriptor, "empty block list");
  Algebra out = make_canonical(blocks.front(), f);
  for (std::size_t i = 1; i < blocks.size(); ++i) out = central_sum(out, make_canonical(blocks[i], f));
  return out;
}

}  // namespace esalg
