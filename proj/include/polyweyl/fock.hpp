#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "polyweyl/algebra.hpp"
#include "polyweyl/step_function.hpp"

namespace polyweyl {

// Specification of a (possibly density-weighted) vacuum state. The default
// weight is the constant density 1; a piecewise-constant positive density p
// weights each region by its mean a_I = (1/|I|) integral_I p; the "length"
// variant is the documented non-additive counterexample a_I = |I|. Weighted
// variants are only defined in degree 1.
class StateSpec {
public:
  enum class Weight { unit, density, length };

  static StateSpec fock(int n);
  static StateSpec weighted(int n, StepFunction density);
  static StateSpec length_weighted(int n);

  int n() const { return n_; }
  Weight kind() const { return kind_; }
  const StepFunction& density() const { return density_; }

  // The mean weight a_I over a region of positive length.
  Rational weight(const Region& i) const;

private:
  StateSpec(int n, Weight kind, StepFunction density);

  int n_;
  Weight kind_;
  StepFunction density_;
};

// Derived constants of the degree-2 vacuum formula, always recomputed from
// the element. The quadratic coefficient enters through A = a2/2 — the
// unique normalization under which the closed form (i) reduces to the
// degree-1 formula at a2 = 0 and (ii) matches the truncated-oscillator
// vacuum expectation to machine precision.
struct FockQuadParams {
  double a = 0, b = 0, c = 0;  // A, B, C
  Complex m;                   // M = B + iC

  static FockQuadParams from_element(const GroupElement& g);
};

// Degree-1 vacuum value with weight a_I:
//   exp(-a_I |I| (u^2 + a1^2)/4) * exp(i a0 a_I |I|).
Complex fock_eval_n1(const StateSpec& spec, const Region& i, const GroupElement& g);

// Degree-2 vacuum value (density 1 only):
//   (1-2iA)^{-1/2} exp(i a0 |I|) exp([4C^2(A^2+2iA) - 3|M|^2] / [6(1-2iA)] |I|).
Complex fock_eval_n2(const Region& i, const GroupElement& g);

// Dispatch on spec.n; degrees >= 3 are rejected (no closed form exists).
Complex fock_eval(const StateSpec& spec, const Region& i, const GroupElement& g);

// Drops the degree bound of an element whose coefficients above the new
// bound all vanish.
GroupElement reduce_degree_bound(const GroupElement& g, int m);

// Linear over words, multiplicative over cells.
Complex state_eval(const StateSpec& spec, const TensorElement& t);

struct FactorCheck {
  Complex whole;    // value on the undivided region
  Complex product;  // product of per-cell values
  double defect;    // |whole - product|
};

FactorCheck factor_check(const StateSpec& spec, const Region& i, const Partition& pi,
                         const GroupElement& g);

inline double factorizability_defect(const StateSpec& spec, const Region& i,
                                     const Partition& pi, const GroupElement& g) {
  return factor_check(spec, i, pi, g).defect;
}

// Minimum eigenvalue of the Hermitian matrix [phi(W_{g_i}^* W_{g_j})]; a
// positive state keeps it >= 0 up to floating error.
double gram_min_eigenvalue(const StateSpec& spec, const std::vector<GroupElement>& elems,
                           const Region& i);

struct RatioCheck {
  double a = 0;        // the A grid point
  int cells = 0;       // |pi|
  Complex predicted;   // (1-2iA)^{-(|pi|-1)/2}
  Complex measured;    // product of cell values / whole value
  double abs_err = 0;
};

struct NogoReport {
  int n = 1;
  int trials = 0;
  std::uint64_t seed = 0;
  double max_defect = 0;
  std::vector<RatioCheck> ratio_checks;      // degree >= 2 only
  bool identities_hold = false;
  double defect_tolerance = 1e-12;
  double ratio_tolerance = 1e-9;
};

// Random sweep of factorizability defects. Degree 1: the defect must vanish
// (within defect_tolerance) — that is the identity being verified. Degree 2:
// the defect is genuinely large (the no-go), and the verified identity is the
// ratio law (1-2iA)^{-(|pi|-1)/2} across the given grid. Degree 3 runs the
// same sweep through elements of degree bound 3 with vanishing cubic
// coefficient (the embedded degree-2 copy), additionally checking that
// composition in the bigger group restricts consistently.
NogoReport nogo_experiment(int n, int trials, std::uint64_t seed,
                           double defect_tolerance = 1e-12, double ratio_tolerance = 1e-9,
                           const std::vector<Rational>& a_grid = {Rational(1, 4), Rational(1, 2),
                                                                  Rational(1), Rational(2)},
                           const std::vector<int>& cell_grid = {2, 3, 4});

}  // namespace polyweyl
