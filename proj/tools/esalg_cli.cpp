// Command line front end. Every command prints one JSON object on stdout.
// Exit codes: 0 computed, 1 verify-theorems found a FAIL row, 2 bad input,
// 3 unsupported (cosquare does not split), 4 internal invariant failure.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "esalg/cohomology.hpp"
#include "esalg/forms.hpp"
#include "esalg/io.hpp"
#include "esalg/verify.hpp"

using namespace esalg;
using nlohmann::ordered_json;

namespace {

Field parse_field_option(const std::string& text) {
  if (text == "Q") return Field::rationals();
  if (text.rfind("GF:", 0) == 0 || text.rfind("gf:", 0) == 0) {
    const std::string p = text.substr(3);
    if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos || p.size() > 18)
      throw Error(ErrorKind::ParseError, "bad field '" + text + "'");
    return Field::prime(std::stoull(p));
  }
  throw Error(ErrorKind::ParseError, "field must be Q or GF:p, got '" + text + "'");
}

Algebra load_algebra(const std::string& path) {
  AlgebraDocument doc = read_algebra_file(path);
  if (auto* a = std::get_if<Algebra>(&doc)) return *a;
  throw Error(ErrorKind::ParseError, path + " holds a dialgebra; this command needs a single product");
}

IdentityKind parse_theory(const std::string& name) {
  if (name == "assoc") return IdentityKind::Associative;
  if (name == "leibniz") return kValidatedLeibniz;
  if (name == "leibniz-left") return IdentityKind::LeibnizLeft;
  if (name == "leibniz-right") return IdentityKind::LeibnizRight;
  throw Error(ErrorKind::ParseError, "unknown theory '" + name + "'");
}

ordered_json triple(const std::array<std::size_t, 3>& t) { return ordered_json::array({t[0], t[1], t[2]}); }

std::vector<Scalar> parse_lambdas(const std::string& csv, const Field& f) {
  std::vector<Scalar> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::string item = csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty()) out.push_back(Scalar::parse(f, item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extra special algebra toolkit: multipliers, covers, capability, classification"};
  app.require_subcommand(1);

  std::string file, descriptor, identity = "assoc", theory = "assoc", field_text = "Q", lambdas_text = "2,3,-1,5";
  std::size_t max_n = 8, max_sum_dim = 11;

  auto* make = app.add_subcommand("make", "Build the algebra of a block descriptor such as j:2+h2:3");
  make->add_option("descriptor", descriptor)->required();
  make->add_option("--field", field_text, "Q or GF:p");

  auto* check = app.add_subcommand("check", "Check an identity on every basis triple");
  check->add_option("file", file)->required();
  check->add_option("--identity", identity)->check(CLI::IsMember({"assoc", "leibniz-left", "leibniz-right", "diassoc"}));

  auto* invariants = app.add_subcommand("invariants", "Center, derived ideal, extra special flag");
  invariants->add_option("file", file)->required();

  auto* multiplier = app.add_subcommand("multiplier", "Dimension of the Schur multiplier H^2(A, F)");
  multiplier->add_option("file", file)->required();
  multiplier->add_option("--theory", theory)->check(CLI::IsMember({"assoc", "leibniz", "leibniz-left", "leibniz-right"}));

  auto* cover_cmd = app.add_subcommand("cover", "Stem cover of an associative algebra");
  cover_cmd->add_option("file", file)->required();
  auto* zstar = app.add_subcommand("zstar", "Z*(A), the image of the cover's center");
  zstar->add_option("file", file)->required();
  auto* capable = app.add_subcommand("capable", "Whether Z*(A) = 0");
  capable->add_option("file", file)->required();
  auto* unicentral = app.add_subcommand("unicentral", "Whether Z*(A) = Z(A)");
  unicentral->add_option("file", file)->required();
  auto* classify_cmd = app.add_subcommand("classify", "Canonical central-sum blocks of an extra special algebra");
  classify_cmd->add_option("file", file)->required();
  auto* leibniz = app.add_subcommand("induced-leibniz", "Leibniz algebra x y = x -| y - y |- x of a dialgebra");
  leibniz->add_option("file", file)->required();

  auto* verify = app.add_subcommand("verify-theorems", "Sweep catalog algebras and their pairwise central sums");
  verify->add_option("--max-n", max_n)->check(CLI::Range(2, 64));
  verify->add_option("--lambdas", lambdas_text, "comma separated, e.g. 2,3,-1,5");
  verify->add_option("--field", field_text, "Q or GF:p");
  verify->add_option("--max-sum-dim", max_sum_dim, "largest central sum dimension in the sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  ordered_json out;
  int status = 0;
  try {
    if (*make) {
      const Field f = parse_field_option(field_text);
      out = to_json(make_sum(parse_descriptors(descriptor, f), f));
    } else if (*check) {
      out["identity"] = identity;
      if (identity == "diassoc") {
        AlgebraDocument doc = read_algebra_file(file);
        const Dialgebra d = std::holds_alternative<Dialgebra>(doc) ? std::get<Dialgebra>(doc)
                                                                    : throw Error(ErrorKind::ParseError, "diassoc needs a document with right_products");
        DiassociativeCheck r = check_diassociative(d);
        out["holds"] = r.holds;
        out["axiom"] = r.holds ? ordered_json(nullptr) : ordered_json(r.axiom);
        out["violation"] = r.violation ? triple(*r.violation) : ordered_json(nullptr);
      } else {
        IdentityCheck r = check_identity(load_algebra(file), parse_theory(identity));
        out["holds"] = r.holds;
        out["violation"] = r.violation ? triple(*r.violation) : ordered_json(nullptr);
      }
    } else if (*invariants) {
      const Algebra a = load_algebra(file);
      out["dim"] = a.dim();
      out["center"] = to_json(center(a));
      out["derived"] = to_json(derived_ideal(a));
      out["extra_special"] = is_extra_special(a);
    } else if (*multiplier) {
      const IdentityKind kind = parse_theory(theory);
      const CocycleSpace cs = cocycle_space(load_algebra(file), kind);
      out["theory"] = to_string(kind);
      out["z2_dim"] = cs.z2.dim();
      out["b2_dim"] = cs.b2.dim();
      out["multiplier_dim"] = cs.h2_dim;
    } else if (*cover_cmd) {
      const CoverExtension k = cover(load_algebra(file));
      out["base_dim"] = k.base_dim;
      out["multiplier_dim"] = k.kernel.dim();
      out["kernel"] = to_json(k.kernel);
      out["cover"] = to_json(k.total);
    } else if (*zstar) {
      const Algebra a = load_algebra(file);
      out["zstar"] = to_json(z_star(a));
      out["center"] = to_json(center(a));
    } else if (*capable) {
      const Algebra a = load_algebra(file);
      const Subspace zs = z_star(a);
      out["capable"] = zs.dim() == 0;
      out["zstar_dim"] = zs.dim();
    } else if (*unicentral) {
      const Algebra a = load_algebra(file);
      out["unicentral"] = is_unicentral(a);
      out["zstar_dim"] = z_star(a).dim();
      out["center_dim"] = center(a).dim();
    } else if (*classify_cmd) {
      const BlockDecomposition d = classify(load_algebra(file));
      out["decomposition"] = d.to_string();
      ordered_json blocks = ordered_json::array();
      for (const auto& b : d.blocks) blocks.push_back(to_string(b));
      out["blocks"] = blocks;
    } else if (*leibniz) {
      AlgebraDocument doc = read_algebra_file(file);
      if (!std::holds_alternative<Dialgebra>(doc))
        throw Error(ErrorKind::ParseError, "induced-leibniz needs a document with right_products");
      out = to_json(induced_leibniz(std::get<Dialgebra>(doc)));
    } else if (*verify) {
      const Field f = parse_field_option(field_text);
      const auto rows = verify_theorems(max_n, parse_lambdas(lambdas_text, f), f, max_sum_dim);
      ordered_json table = ordered_json::array();
      std::size_t failures = 0;
      for (const auto& r : rows) {
        ordered_json row;
        row["name"] = r.name;
        row["dim"] = r.dim;
        row["multiplier"] = r.multiplier;
        row["predicted"] = r.predicted;
        row["leibniz_multiplier"] = r.leibniz_multiplier;
        row["leibniz_predicted"] = r.leibniz_predicted;
        row["capable"] = r.capable;
        row["unicentral"] = r.unicentral;
        row["identities_ok"] = r.identities_ok;
        row["classify_ok"] = r.classify_ok;
        row["status"] = r.pass ? "PASS" : "FAIL";
        if (r.error) row["error"] = *r.error;
        failures += r.pass ? 0 : 1;
        table.push_back(row);
      }
      out["field"] = to_json(f);
      out["leibniz_orientation"] = to_string(kValidatedLeibniz);
      out["rows"] = table;
      out["total"] = rows.size();
      out["failures"] = failures;
      status = failures ? 1 : 0;
    }
  } catch (const Error& e) {
    out = ordered_json{{"error", to_string(e.kind())}, {"message", e.what()}};
    std::cout << out.dump() << '\n';
    std::cerr << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    out = ordered_json{{"error", "InvariantFailure"}, {"message", e.what()}};
    std::cout << out.dump() << '\n';
    std::cerr << e.what() << '\n';
    return 4;
  }
  std::cout << out.dump() << '\n';
  return status;
}
