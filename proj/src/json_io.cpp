#include "polyweyl/json_io.hpp"

namespace polyweyl {

namespace {

const Json& require_key(const Json& j, const char* key, const char* what) {
  if (!j.is_object())
    throw ParseError(std::string(what) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(std::string(what) + ": missing key \"" + key + "\"");
  return *it;
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer())
    throw ParseError(std::string(what) + ": expected an integer");
  return j.get<int>();
}

double number_from_json(const Json& j, const char* what) {
  if (!j.is_number())
    throw ParseError(std::string(what) + ": expected a number");
  return j.get<double>();
}

const Json& require_array(const Json& j, const char* what) {
  if (!j.is_array())
    throw ParseError(std::string(what) + ": expected an array");
  return j;
}

}  // namespace

Json rational_to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("rational: expected a string \"p/q\"");
  return Rational::parse(j.get<std::string>());
}

Json scalar_to_json(const Scalar& s) {
  if (s.is_exact()) return s.exact_value().str();
  return s.to_double();
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar(Rational::parse(j.get<std::string>()));
  if (j.is_number()) return Scalar(j.get<double>());
  throw ParseError("scalar: expected a rational string or a number");
}

Json complex_to_json(const Complex& z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const Json& j) {
  return Complex(number_from_json(require_key(j, "re", "complex"), "complex re"),
                 number_from_json(require_key(j, "im", "complex"), "complex im"));
}

Json interval_to_json(const Interval& iv) {
  return Json{{"lo", rational_to_json(iv.lo)}, {"hi", rational_to_json(iv.hi)}};
}

Interval interval_from_json(const Json& j) {
  return Interval(rational_from_json(require_key(j, "lo", "interval")),
                  rational_from_json(require_key(j, "hi", "interval")));
}

Json region_to_json(const Region& r) {
  Json out = Json::array();
  for (const Interval& iv : r.parts()) out.push_back(interval_to_json(iv));
  return out;
}

Region region_from_json(const Json& j) {
  std::vector<Interval> parts;
  for (const Json& e : require_array(j, "region")) parts.push_back(interval_from_json(e));
  return Region::from_intervals(std::move(parts));
}

Json partition_to_json(const Partition& p) {
  Json cells = Json::array();
  for (const Region& cell : p.cells()) cells.push_back(region_to_json(cell));
  return Json{{"of", region_to_json(p.of())}, {"cells", cells}};
}

Partition partition_from_json(const Json& j) {
  const Region of = region_from_json(require_key(j, "of", "partition"));
  std::vector<Region> cells;
  for (const Json& e : require_array(require_key(j, "cells", "partition"), "partition cells"))
    cells.push_back(region_from_json(e));
  return Partition::build(of, std::move(cells));
}

Json poly_to_json(const Poly& p) {
  Json coeffs = Json::array();
  for (const Rational& c : p.c) coeffs.push_back(rational_to_json(c));
  return Json{{"coeffs", coeffs}};
}

Poly poly_from_json(const Json& j, int n) {
  const Json& coeffs = require_array(require_key(j, "coeffs", "polynomial"), "polynomial coeffs");
  if (static_cast<int>(coeffs.size()) != n + 1)
    throw ParseError("polynomial: expected exactly n+1 coefficients");
  Poly p = Poly::zero(n);
  for (int k = 0; k <= n; ++k) p.c[k] = rational_from_json(coeffs[k]);
  return p;
}

Json group_to_json(const GroupElement& g) {
  return Json{{"n", g.n}, {"u", rational_to_json(g.u)}, {"P", poly_to_json(g.p)}};
}

GroupElement group_from_json(const Json& j) {
  const int n = int_from_json(require_key(j, "n", "group element"), "group element n");
  if (n < 1) throw ParseError("group element: n must be >= 1");
  return GroupElement(n, rational_from_json(require_key(j, "u", "group element")),
                      poly_from_json(require_key(j, "P", "group element"), n));
}

Json scalar_group_to_json(const ScalarGroupElement& g) {
  Json coeffs = Json::array();
  for (const Scalar& c : g.p.c) coeffs.push_back(scalar_to_json(c));
  return Json{{"n", g.n}, {"u", scalar_to_json(g.u)}, {"P", Json{{"coeffs", coeffs}}}};
}

ScalarGroupElement scalar_group_from_json(const Json& j) {
  const int n = int_from_json(require_key(j, "n", "group element"), "group element n");
  if (n < 1) throw ParseError("group element: n must be >= 1");
  const Json& coeffs = require_array(
      require_key(require_key(j, "P", "group element"), "coeffs", "polynomial"),
      "polynomial coeffs");
  if (static_cast<int>(coeffs.size()) != n + 1)
    throw ParseError("polynomial: expected exactly n+1 coefficients");
  ScalarPoly p = ScalarPoly::zero(n);
  for (int k = 0; k <= n; ++k) p.c[k] = scalar_from_json(coeffs[k]);
  return ScalarGroupElement(n, scalar_from_json(require_key(j, "u", "group element")),
                            std::move(p));
}

Json step_function_to_json(const StepFunction& f) {
  Json out = Json::array();
  for (const StepFunction::Piece& piece : f.pieces())
    out.push_back(Json{{"lo", rational_to_json(piece.iv.lo)},
                       {"hi", rational_to_json(piece.iv.hi)},
                       {"val", rational_to_json(piece.val)}});
  return out;
}

StepFunction step_function_from_json(const Json& j) {
  std::vector<StepFunction::Piece> pieces;
  for (const Json& e : require_array(j, "step function"))
    pieces.push_back({Interval(rational_from_json(require_key(e, "lo", "step piece")),
                               rational_from_json(require_key(e, "hi", "step piece"))),
                      rational_from_json(require_key(e, "val", "step piece"))});
  return StepFunction::from_pieces(std::move(pieces));
}

Json current_to_json(const CurrentElement& x) {
  Json fs = Json::array();
  for (int k = 1; k <= x.n() + 1; ++k) fs.push_back(step_function_to_json(x.f(k)));
  return Json{{"n", x.n()}, {"l0", rational_to_json(x.l0())}, {"f", fs}};
}

CurrentElement current_from_json(const Json& j) {
  const int n = int_from_json(require_key(j, "n", "current element"), "current element n");
  if (n < 1) throw ParseError("current element: n must be >= 1");
  const Json& fs = require_array(require_key(j, "f", "current element"), "current element f");
  if (static_cast<int>(fs.size()) != n + 1)
    throw ParseError("current element: expected exactly n+1 component functions");
  std::vector<StepFunction> f;
  for (const Json& e : fs) f.push_back(step_function_from_json(e));
  return CurrentElement(n, rational_from_json(require_key(j, "l0", "current element")),
                        std::move(f));
}

Json rescaling_to_json(const RescalingConstants& rc) {
  Json c = Json::array();
  for (const Scalar& v : rc.c) c.push_back(scalar_to_json(v));
  return Json{{"n", rc.n},
              {"length", rational_to_json(rc.length)},
              {"a_i", rational_to_json(rc.a_i)},
              {"t", rational_to_json(rc.t)},
              {"b", scalar_to_json(rc.b)},
              {"c", c}};
}

Json algebra_to_json(const AlgebraElement& x) {
  Json terms = Json::array();
  for (const auto& [g, c] : x.terms())
    terms.push_back(Json{{"g", group_to_json(g)}, {"c", complex_to_json(c)}});
  return Json{{"n", x.n()}, {"terms", terms}};
}

AlgebraElement algebra_from_json(const Json& j) {
  const int n = int_from_json(require_key(j, "n", "algebra element"), "algebra element n");
  if (n < 1) throw ParseError("algebra element: n must be >= 1");
  AlgebraElement x(n);
  for (const Json& e :
       require_array(require_key(j, "terms", "algebra element"), "algebra terms"))
    x.add_term(group_from_json(require_key(e, "g", "algebra term")),
               complex_from_json(require_key(e, "c", "algebra term")));
  return x;
}

Json tensor_to_json(const TensorElement& t) {
  Json words = Json::array();
  for (const TensorElement::Word& w : t.words()) {
    Json factors = Json::array();
    for (const GroupElement& g : w.factors)
      factors.push_back(Json::array(
          {Json{{"g", group_to_json(g)}, {"c", complex_to_json(Complex(1))}}}));
    words.push_back(Json{{"coeff", complex_to_json(w.coeff)}, {"factors", factors}});
  }
  return Json{{"n", t.n()}, {"partition", partition_to_json(t.partition())}, {"words", words}};
}

TensorElement tensor_from_json(const Json& j) {
  const int n = int_from_json(require_key(j, "n", "tensor element"), "tensor element n");
  if (n < 1) throw ParseError("tensor element: n must be >= 1");
  const Partition partition = partition_from_json(require_key(j, "partition", "tensor element"));
  TensorElement t(n, partition);
  for (const Json& w :
       require_array(require_key(j, "words", "tensor element"), "tensor words")) {
    const Complex coeff = complex_from_json(require_key(w, "coeff", "tensor word"));
    const Json& factors = require_array(require_key(w, "factors", "tensor word"),
                                        "tensor word factors");
    if (static_cast<int>(factors.size()) != partition.size())
      throw ParseError("tensor word: expected exactly one factor list per cell");
    // Expand the per-cell generator combinations multilinearly.
    std::vector<std::pair<Complex, std::vector<GroupElement>>> expanded;
    expanded.push_back({coeff, {}});
    for (const Json& cell : factors) {
      std::vector<std::pair<Complex, std::vector<GroupElement>>> next;
      for (const Json& term : require_array(cell, "tensor cell factor")) {
        const GroupElement g = group_from_json(require_key(term, "g", "tensor factor"));
        const Complex c = complex_from_json(require_key(term, "c", "tensor factor"));
        for (const auto& [pc, pf] : expanded) {
          std::vector<GroupElement> f = pf;
          f.push_back(g);
          next.push_back({pc * c, std::move(f)});
        }
      }
      expanded = std::move(next);
    }
    for (auto& [c, f] : expanded) t.add_word(std::move(f), c);
  }
  return t;
}

Json state_spec_to_json(const StateSpec& spec) {
  switch (spec.kind()) {
    case StateSpec::Weight::unit:
      return Json{{"n", spec.n()}, {"weight", "unit"}};
    case StateSpec::Weight::length:
      return Json{{"n", spec.n()}, {"weight", "length"}};
    case StateSpec::Weight::density:
      return Json{{"n", spec.n()},
                  {"weight", "density"},
                  {"density", step_function_to_json(spec.density())}};
  }
  throw DomainError("unknown weight kind");
}

StateSpec state_spec_from_json(const Json& j) {
  const int n = int_from_json(require_key(j, "n", "state spec"), "state spec n");
  const Json& kind = require_key(j, "weight", "state spec");
  if (!kind.is_string()) throw ParseError("state spec: weight must be a string");
  const std::string w = kind.get<std::string>();
  if (w == "unit") return StateSpec::fock(n);
  if (w == "length") return StateSpec::length_weighted(n);
  if (w == "density")
    return StateSpec::weighted(
        n, step_function_from_json(require_key(j, "density", "state spec")));
  throw ParseError("state spec: weight must be \"unit\", \"density\", or \"length\"");
}

Json factor_check_to_json(const FactorCheck& fc) {
  return Json{{"whole", complex_to_json(fc.whole)},
              {"product", complex_to_json(fc.product)},
              {"defect", fc.defect}};
}

Json nogo_report_to_json(const NogoReport& r) {
  Json checks = Json::array();
  for (const RatioCheck& rc : r.ratio_checks)
    checks.push_back(Json{{"A", rc.a},
                          {"cells", rc.cells},
                          {"predicted", complex_to_json(rc.predicted)},
                          {"measured", complex_to_json(rc.measured)},
                          {"abs_err", rc.abs_err}});
  return Json{{"n", r.n},
              {"trials", r.trials},
              {"seed", r.seed},
              {"max_defect", r.max_defect},
              {"ratio_checks", checks},
              {"identities_hold", r.identities_hold},
              {"defect_tolerance", r.defect_tolerance},
              {"ratio_tolerance", r.ratio_tolerance}};
}

Json oracle_report_to_json(const OracleReport& r) {
  return Json{{"n", r.n},
              {"truncation", r.truncation},
              {"vac_g", complex_to_json(r.vac_g)},
              {"vac_h", complex_to_json(r.vac_h)},
              {"vac_prod", complex_to_json(r.vac_prod)},
              {"vac_composed", complex_to_json(r.vac_composed)},
              {"formula_g", complex_to_json(r.formula_g)},
              {"formula_h", complex_to_json(r.formula_h)},
              {"formula_composed", complex_to_json(r.formula_composed)},
              {"err_composition", r.err_composition},
              {"err_state_g", r.err_state_g},
              {"err_state_h", r.err_state_h},
              {"residual", r.residual},
              {"converged", r.converged}};
}

}  // namespace polyweyl
