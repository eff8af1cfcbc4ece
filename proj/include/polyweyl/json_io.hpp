#pragma once

#include "json.hpp"
#include "polyweyl/algebra.hpp"
#include "polyweyl/fock.hpp"
#include "polyweyl/lie_current.hpp"
#include "polyweyl/oscillator_oracle.hpp"

// JSON conventions, shared by every document:
//   - rationals are canonical strings "p" or "p/q";
//   - exact-or-float scalars are strings when exact, numbers otherwise;
//   - complex values are {"re": number, "im": number};
//   - intervals are {"lo","hi"}, regions are arrays of intervals,
//     partitions are {"of": region, "cells": [region, ...]}.
// Parsers throw ParseError on shape violations (wrong type, missing key) and
// let DomainError propagate for structurally valid but illegal values.

namespace polyweyl {

using Json = nlohmann::json;

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json complex_to_json(const Complex& z);
Complex complex_from_json(const Json& j);

Json interval_to_json(const Interval& iv);
Interval interval_from_json(const Json& j);

Json region_to_json(const Region& r);
Region region_from_json(const Json& j);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// {"coeffs": [n+1 rationals]}, constant term first.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j, int n);

// {"n": int, "u": rational, "P": {"coeffs": [n+1 rationals]}}
Json group_to_json(const GroupElement& g);
GroupElement group_from_json(const Json& j);

Json scalar_group_to_json(const ScalarGroupElement& g);
ScalarGroupElement scalar_group_from_json(const Json& j);

// Array of {"lo","hi","val"}.
Json step_function_to_json(const StepFunction& f);
StepFunction step_function_from_json(const Json& j);

// {"n": int, "l0": rational, "f": [n+1 step functions]}
Json current_to_json(const CurrentElement& x);
CurrentElement current_from_json(const Json& j);

Json rescaling_to_json(const RescalingConstants& rc);

// {"n": int, "terms": [{"g": group element, "c": complex}]}
Json algebra_to_json(const AlgebraElement& x);
AlgebraElement algebra_from_json(const Json& j);

// {"n": int, "partition": {...}, "words": [{"coeff": complex, "factors":
// [per-cell arrays of {"g","c"}]}]}. On input each cell carries a list of
// weighted generators which is expanded multilinearly; output always emits
// one generator per cell with unit weight, the word coefficient carrying
// everything else.
Json tensor_to_json(const TensorElement& t);
TensorElement tensor_from_json(const Json& j);

// {"n": int, "weight": "unit"|"density"|"length"[, "density": step function]}
Json state_spec_to_json(const StateSpec& spec);
StateSpec state_spec_from_json(const Json& j);

Json factor_check_to_json(const FactorCheck& fc);
Json nogo_report_to_json(const NogoReport& r);
Json oracle_report_to_json(const OracleReport& r);

}  // namespace polyweyl
