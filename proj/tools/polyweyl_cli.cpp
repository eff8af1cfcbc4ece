// Command-line front end: every verb reads a JSON payload on stdin (except
// `nogo`, which is driven entirely by flags), writes one JSON document to
// stdout, and exits 0 on success, 1 on a domain error, 2 on malformed input,
// or 3 when the factorization identity sweep itself fails.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polyweyl/algebra.hpp"
#include "polyweyl/errors.hpp"
#include "polyweyl/fock.hpp"
#include "polyweyl/heis.hpp"
#include "polyweyl/json_io.hpp"
#include "polyweyl/lie_current.hpp"
#include "polyweyl/oscillator_oracle.hpp"
#include "polyweyl/poly.hpp"

namespace {

using polyweyl::Json;

Json parse_stdin() {
  std::ostringstream buffer;
  buffer << std::cin.rdbuf();
  return Json::parse(buffer.str());
}

const Json& payload_key(const Json& j, const char* key) {
  if (!j.is_object())
    throw polyweyl::ParseError("payload: expected a JSON object");
  auto it = j.find(key);
  if (it == j.end())
    throw polyweyl::ParseError(std::string("payload: missing key \"") + key + "\"");
  return *it;
}

int payload_int(const Json& j, const char* key) {
  const Json& v = payload_key(j, key);
  if (!v.is_number_integer())
    throw polyweyl::ParseError(std::string("payload: \"") + key + "\" must be an integer");
  return v.get<int>();
}

bool payload_flag(const Json& j, const char* key) {
  if (!j.is_object()) throw polyweyl::ParseError("payload: expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) return false;
  if (!it->is_boolean())
    throw polyweyl::ParseError(std::string("payload: \"") + key + "\" must be a boolean");
  return it->get<bool>();
}

// Accepts either the canonical "p/q" form or a plain decimal like
// "1.41421356"; decimals convert exactly (digits over a power of ten).
polyweyl::Rational rational_or_decimal(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return polyweyl::Rational::parse(text);
  std::string digits = text;
  bool negative = false;
  if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
    negative = digits[0] == '-';
    digits = digits.substr(1);
  }
  const auto point = digits.find('.');
  const std::string int_part = digits.substr(0, point);
  const std::string frac_part = digits.substr(point + 1);
  if (int_part.empty() && frac_part.empty())
    throw polyweyl::ParseError("decimal literal has no digits");
  polyweyl::BigInt num = 0;
  for (char ch : int_part + frac_part) {
    if (ch < '0' || ch > '9')
      throw polyweyl::ParseError("decimal literal contains a non-digit");
    num = num * 10 + (ch - '0');
  }
  polyweyl::BigInt den = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
  if (negative) num = -num;
  return polyweyl::Rational(num, den);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace polyweyl;

  CLI::App app{"Exact calculator for polynomial Weyl systems on rational intervals"};
  app.require_subcommand(1);
  app.fallthrough();  // let --pretty appear after the verb, where users put it
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent the JSON output");

  app.add_subcommand("compose", "group law: payload {\"g\", \"h\"}");
  app.add_subcommand("invert", "group inverse: payload {\"g\"}");
  app.add_subcommand("tw", "transport map: payload {\"n\", \"w\", \"poly\", \"inverse\"?}");
  app.add_subcommand("shift", "argument shift P(X+u): payload {\"n\", \"u\", \"poly\"}");
  app.add_subcommand("khat", "interval rescaling: payload {\"length\", \"g\", \"inverse\"?}");
  app.add_subcommand("bracket", "current bracket: payload {\"x\", \"y\"}");
  app.add_subcommand("jacobi", "Jacobi defect: payload {\"x\", \"y\", \"z\"}");
  app.add_subcommand("rescale-constants",
                     "structure constants: payload {\"n\", \"length\", \"a_i\"}");
  app.add_subcommand("embed",
                     "diagonal embedding: payload {\"partition\", \"region\", \"element\"}");
  app.add_subcommand("refine", "refinement embedding: payload {\"t\", \"finer\"}");
  app.add_subcommand("cocycle-check",
                     "two-step vs one-step refinement: payload {\"t\", \"mid\", \"fine\"}");
  app.add_subcommand("state", "vacuum state value: payload {\"spec\", \"t\"}");
  app.add_subcommand("factor-check",
                     "factorization defect: payload {\"spec\", \"region\", \"partition\", \"g\"}");
  app.add_subcommand("gram",
                     "positivity check: payload {\"spec\", \"region\", \"elements\"}");
  app.add_subcommand("oracle",
                     "matrix-model cross-check: payload {\"g\", \"h\", \"truncation\"?}");

  auto* nogo = app.add_subcommand("nogo", "random factorization sweep (flags only)");
  int nogo_n = 1;
  int nogo_trials = 200;
  std::uint64_t nogo_seed = 0;
  int nogo_cells = 0;
  double nogo_tolerance = 0;
  std::string a2_text;
  std::string a_text;
  nogo->add_option("--n", nogo_n, "degree bound (1, 2, or 3)");
  nogo->add_option("--trials", nogo_trials, "number of random trials");
  nogo->add_option("--seed", nogo_seed, "random seed");
  nogo->add_option("--cells", nogo_cells, "restrict the ratio grid to one cell count");
  auto* tol_opt = nogo->add_option(
      "--tolerance", nogo_tolerance,
      "defect tolerance for degree 1, ratio tolerance for degree >= 2");
  auto* a2_opt = nogo->add_option(
      "--a2", a2_text, "restrict the ratio grid to one quadratic coefficient (A = a2/2)");
  auto* a_opt = nogo->add_option("--A", a_text, "restrict the ratio grid to one A value");
  a2_opt->excludes(a_opt);
  a_opt->excludes(a2_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << Json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  Json out;
  int rc = 0;

  try {
    if (verb == "compose") {
      const Json in = parse_stdin();
      out = group_to_json(compose(group_from_json(payload_key(in, "g")),
                                  group_from_json(payload_key(in, "h"))));
    } else if (verb == "invert") {
      const Json in = parse_stdin();
      out = group_to_json(inverse(group_from_json(payload_key(in, "g"))));
    } else if (verb == "tw") {
      const Json in = parse_stdin();
      const int n = payload_int(in, "n");
      if (n < 1) throw DomainError("degree bound must be >= 1");
      const Rational w = rational_from_json(payload_key(in, "w"));
      const Poly p = poly_from_json(payload_key(in, "poly"), n);
      out = poly_to_json(payload_flag(in, "inverse") ? t_inv_apply(w, p) : t_apply(w, p));
    } else if (verb == "shift") {
      const Json in = parse_stdin();
      const int n = payload_int(in, "n");
      if (n < 1) throw DomainError("degree bound must be >= 1");
      const Rational u = rational_from_json(payload_key(in, "u"));
      out = poly_to_json(s_apply(u, poly_from_json(payload_key(in, "poly"), n)));
    } else if (verb == "khat") {
      const Json in = parse_stdin();
      const RescaleMap map(rational_from_json(payload_key(in, "length")));
      const GroupElement g = group_from_json(payload_key(in, "g"));
      const ScalarGroupElement r =
          payload_flag(in, "inverse") ? khat_inverse(map, g) : khat_apply(map, g);
      bool exact = r.u.is_exact();
      for (const Scalar& c : r.p.c) exact = exact && c.is_exact();
      out = Json{{"g", scalar_group_to_json(r)}, {"exact", exact}};
    } else if (verb == "bracket") {
      const Json in = parse_stdin();
      out = current_to_json(current_bracket(current_from_json(payload_key(in, "x")),
                                            current_from_json(payload_key(in, "y"))));
    } else if (verb == "jacobi") {
      const Json in = parse_stdin();
      const CurrentElement defect = jacobi_defect(current_from_json(payload_key(in, "x")),
                                                  current_from_json(payload_key(in, "y")),
                                                  current_from_json(payload_key(in, "z")));
      out = Json{{"defect", current_to_json(defect)}, {"is_zero", defect.is_zero()}};
    } else if (verb == "rescale-constants") {
      const Json in = parse_stdin();
      out = rescaling_to_json(rescaling_constants(payload_int(in, "n"),
                                                  rational_from_json(payload_key(in, "length")),
                                                  rational_from_json(payload_key(in, "a_i"))));
    } else if (verb == "embed") {
      const Json in = parse_stdin();
      const Partition target = partition_from_json(payload_key(in, "partition"));
      const LocalizedElement w(region_from_json(payload_key(in, "region")),
                               algebra_from_json(payload_key(in, "element")));
      out = tensor_to_json(embed_generator(target, w));
    } else if (verb == "refine") {
      const Json in = parse_stdin();
      out = tensor_to_json(embed_refine(tensor_from_json(payload_key(in, "t")),
                                        partition_from_json(payload_key(in, "finer"))));
    } else if (verb == "cocycle-check") {
      const Json in = parse_stdin();
      const TensorElement t = tensor_from_json(payload_key(in, "t"));
      const Partition mid = partition_from_json(payload_key(in, "mid"));
      const Partition fine = partition_from_json(payload_key(in, "fine"));
      out = Json{{"equal", embed_refine(embed_refine(t, mid), fine) == embed_refine(t, fine)}};
    } else if (verb == "state") {
      const Json in = parse_stdin();
      const Complex value = state_eval(state_spec_from_json(payload_key(in, "spec")),
                                       tensor_from_json(payload_key(in, "t")));
      out = Json{{"value", complex_to_json(value)}};
    } else if (verb == "factor-check") {
      const Json in = parse_stdin();
      out = factor_check_to_json(factor_check(state_spec_from_json(payload_key(in, "spec")),
                                              region_from_json(payload_key(in, "region")),
                                              partition_from_json(payload_key(in, "partition")),
                                              group_from_json(payload_key(in, "g"))));
    } else if (verb == "gram") {
      const Json in = parse_stdin();
      const StateSpec spec = state_spec_from_json(payload_key(in, "spec"));
      const Region region = region_from_json(payload_key(in, "region"));
      std::vector<GroupElement> elems;
      const Json& list = payload_key(in, "elements");
      if (!list.is_array())
        throw ParseError("payload: \"elements\" must be an array of group elements");
      for (const Json& e : list) elems.push_back(group_from_json(e));
      out = Json{{"min_eigenvalue", gram_min_eigenvalue(spec, elems, region)}};
    } else if (verb == "oracle") {
      const Json in = parse_stdin();
      int truncation = 64;
      if (in.is_object() && in.contains("truncation")) truncation = payload_int(in, "truncation");
      out = oracle_report_to_json(oracle_matrix_check(group_from_json(payload_key(in, "g")),
                                                      group_from_json(payload_key(in, "h")),
                                                      truncation));
    } else if (verb == "nogo") {
      double defect_tolerance = 1e-12;
      double ratio_tolerance = 1e-9;
      if (tol_opt->count() > 0) {
        if (nogo_n == 1)
          defect_tolerance = nogo_tolerance;
        else
          ratio_tolerance = nogo_tolerance;
      }
      std::vector<Rational> a_grid = {Rational(1, 4), Rational(1, 2), Rational(1), Rational(2)};
      if (a2_opt->count() > 0) a_grid = {rational_or_decimal(a2_text) / Rational(2)};
      if (a_opt->count() > 0) a_grid = {rational_or_decimal(a_text)};
      std::vector<int> cell_grid = {2, 3, 4};
      if (nogo_cells > 0) cell_grid = {nogo_cells};
      const NogoReport report = nogo_experiment(nogo_n, nogo_trials, nogo_seed, defect_tolerance,
                                                ratio_tolerance, a_grid, cell_grid);
      out = nogo_report_to_json(report);
      rc = report.identities_hold ? 0 : 3;
    } else {
      throw DomainError("unknown verb: " + verb);
    }
  } catch (const ParseError& e) {
    std::cout << Json{{"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cout << Json{{"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cout << Json{{"error", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << Json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }

  std::cout << (pretty ? out.dump(2) : out.dump()) << "\n";
  return rc;
}
