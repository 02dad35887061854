#include "esalg/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

namespace esalg {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Error parse_error(const std::string& where, const std::string& what) {
  return Error(ErrorKind::ParseError, "at " + where + ": " + what);
}

Field parse_field(const json& doc) {
  if (!doc.contains("field") || !doc["field"].is_object()) throw parse_error("/field", "missing field object");
  const json& f = doc["field"];
  if (!f.contains("kind") || !f["kind"].is_string()) throw parse_error("/field/kind", "missing kind");
  const std::string kind = f["kind"].get<std::string>();
  if (kind == "Q") return Field::rationals();
  if (kind != "GF") throw parse_error("/field/kind", "expected \"Q\" or \"GF\", got \"" + kind + "\"");
  if (!f.contains("p") || !f["p"].is_number_unsigned()) throw parse_error("/field/p", "expected a positive integer");
  return Field::prime(f["p"].get<std::uint64_t>());
}

Scalar parse_coefficient(const Field& field, const json& v, const std::string& where) {
  try {
    if (v.is_string()) return Scalar::parse(field, v.get<std::string>());
    if (v.is_number_integer()) return Scalar::from_int(field, v.get<long>());
  } catch (const Error& e) {
    throw parse_error(where, e.what());
  }
  throw parse_error(where, "coefficient must be a string such as \"3/2\"");
}

Algebra parse_products(const json& doc, const char* key, const Field& field, std::size_t dim,
                       const std::vector<std::string>& names) {
  Algebra a(field, dim, names);
  if (!doc.contains(key)) return a;
  const json& list = doc[key];
  const std::string base = std::string("/") + key;
  if (!list.is_array()) throw parse_error(base, "expected an array of [i, j, k, coefficient]");
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < list.size(); ++e) {
    const std::string where = base + "/" + std::to_string(e);
    const json& entry = list[e];
    if (!entry.is_array() || entry.size() != 4) throw parse_error(where, "expected [i, j, k, coefficient]");
    std::size_t idx[3];
    for (int t = 0; t < 3; ++t) {
      if (!entry[t].is_number_unsigned()) throw parse_error(where + "/" + std::to_string(t), "index must be a nonnegative integer");
      idx[t] = entry[t].get<std::size_t>();
      if (idx[t] >= dim) throw parse_error(where + "/" + std::to_string(t), "index out of range for dim " + std::to_string(dim));
    }
    if (!seen.insert({idx[0], idx[1], idx[2]}).second) throw parse_error(where, "duplicate entry for this (i, j, k)");
    a.set_coeff(idx[0], idx[1], idx[2], parse_coefficient(field, entry[3], where + "/3"));
  }
  return a;
}

ordered_json product_list(const Algebra& a) {
  ordered_json list = ordered_json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!a.coeff(i, j, k).is_zero()) list.push_back(ordered_json::array({i, j, k, a.coeff(i, j, k).to_string()}));
  return list;
}

}  // namespace

AlgebraDocument parse_algebra(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, "at byte " + std::to_string(e.byte) + ": malformed JSON");
  }
  if (!doc.is_object()) throw parse_error("/", "expected a JSON object");
  const Field field = parse_field(doc);
  if (!doc.contains("dim") || !doc["dim"].is_number_unsigned() || doc["dim"].get<std::size_t>() == 0)
    throw parse_error("/dim", "expected a positive integer");
  const std::size_t dim = doc["dim"].get<std::size_t>();
  if (dim > 64) throw parse_error("/dim", "dimension above 64 is not supported");
  std::vector<std::string> names;
  if (doc.contains("basis")) {
    const json& b = doc["basis"];
    if (!b.is_array() || b.size() != dim) throw parse_error("/basis", "expected " + std::to_string(dim) + " names");
    for (std::size_t i = 0; i < dim; ++i) {
      if (!b[i].is_string()) throw parse_error("/basis/" + std::to_string(i), "name must be a string");
      names.push_back(b[i].get<std::string>());
    }
  }
  Algebra left = parse_products(doc, "products", field, dim, names);
  if (!doc.contains("right_products")) return left;
  Algebra right = parse_products(doc, "right_products", field, dim, names);
  return Dialgebra(std::move(left), std::move(right));
}

AlgebraDocument read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

ordered_json to_json(const Field& f) {
  if (f.is_rational()) return ordered_json{{"kind", "Q"}};
  return ordered_json{{"kind", "GF"}, {"p", f.p()}};
}

ordered_json to_json(const Algebra& a) {
  ordered_json doc;
  doc["field"] = to_json(a.field());
  doc["dim"] = a.dim();
  doc["basis"] = a.basis_names();
  doc["products"] = product_list(a);
  return doc;
}

ordered_json to_json(const Dialgebra& d) {
  ordered_json doc = to_json(d.left());
  doc["right_products"] = product_list(d.right());
  return doc;
}

ordered_json to_json(const Subspace& s) {
  ordered_json basis = ordered_json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (const auto& x : s.vector(i)) row.push_back(x.to_string());
    basis.push_back(row);
  }
  return ordered_json{{"dim", s.dim()}, {"basis", basis}};
}

std::string write_algebra(const AlgebraDocument& doc) {
  return std::visit([](const auto& a) { return to_json(a).dump(); }, doc);
}

}  // namespace esalg
