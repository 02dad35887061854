#ifndef ESALG_IO_HPP
#define ESALG_IO_HPP

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "esalg/dialgebra.hpp"

namespace esalg {

/// JSON algebra document:
///   {"field": {"kind": "Q"} | {"kind": "GF", "p": 5},
///    "dim": 3, "basis": ["x1", "x2", "z"],
///    "products": [[0, 1, 2, "1"]],          // x_0 x_1 = 1 * x_2
///    "right_products": [...]}               // present only for dialgebras
/// Indices are 0-based, coefficients are scalar strings, unlisted products
/// are zero. With right_products, "products" is -| and "right_products" is |-.
using AlgebraDocument = std::variant<Algebra, Dialgebra>;

/// Throws ParseError (with the offending JSON location) or UnsupportedField.
AlgebraDocument parse_algebra(std::string_view text);
AlgebraDocument read_algebra_file(const std::string& path);

nlohmann::ordered_json to_json(const Field& f);
nlohmann::ordered_json to_json(const Algebra& a);
nlohmann::ordered_json to_json(const Dialgebra& d);
nlohmann::ordered_json to_json(const Subspace& s);

/// Canonical document text: products sorted by (i, j, k), zeros omitted.
std::string write_algebra(const AlgebraDocument& doc);

}  // namespace esalg

#endif  // ESALG_IO_HPP
