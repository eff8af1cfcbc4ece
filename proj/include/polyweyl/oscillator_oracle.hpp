#pragma once

#include "polyweyl/fock.hpp"
#include "polyweyl/heis.hpp"

namespace polyweyl {

// Cross-validation of the closed-form state values and the group law against
// truncated ladder-operator matrices: q = (a + a*)/sqrt(2), p = i(a* - a)/sqrt(2),
// W(u,P) = exp(i(u p + P(q))), with vacuum (first basis vector) expectations.
struct OracleReport {
  int n = 1;
  int truncation = 0;
  Complex vac_g;         // <0| W(g) |0>
  Complex vac_h;         // <0| W(h) |0>
  Complex vac_prod;      // <0| W(g) W(h) |0>
  Complex vac_composed;  // <0| W(g o h) |0>
  Complex formula_g;     // closed-form value of g over a unit-length interval
  Complex formula_h;
  Complex formula_composed;
  double err_composition = 0;  // |vac_prod - vac_composed|
  double err_state_g = 0;      // |vac_g - formula_g|
  double err_state_h = 0;
  double residual = 0;    // max vacuum-value change vs half the truncation
  bool converged = false;  // residual <= 1e-6
};

// Requires degree bound 1 or 2, |u| <= 1 and |a_j| <= 1 on both elements, and
// truncation >= 4. A truncation that is too small shows up as converged =
// false with the measured residual, not as an error.
OracleReport oracle_matrix_check(const GroupElement& g, const GroupElement& h, int truncation);

}  // namespace polyweyl
