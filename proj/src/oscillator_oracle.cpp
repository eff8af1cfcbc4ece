#include "polyweyl/oscillator_oracle.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace polyweyl {

namespace {

// exp(i (u p + P(q))) on the dim-dimensional truncation, via the
// eigendecomposition of the Hermitian exponent.
Eigen::MatrixXcd weyl_matrix(const GroupElement& e, int dim) {
  Eigen::MatrixXd ladder = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 1; i < dim; ++i) ladder(i - 1, i) = std::sqrt(static_cast<double>(i));
  const Eigen::MatrixXd q = (ladder + ladder.transpose()) / std::sqrt(2.0);
  const Eigen::MatrixXcd p =
      (Complex(0, 1) / std::sqrt(2.0)) * (ladder.transpose() - ladder).cast<Complex>();

  Eigen::MatrixXcd h = e.u.to_double() * p;
  Eigen::MatrixXd qpow = Eigen::MatrixXd::Identity(dim, dim);
  h += e.p.c[0].to_double() * qpow.cast<Complex>();
  for (int j = 1; j <= e.n; ++j) {
    qpow = (qpow * q).eval();
    h += e.p.c[j].to_double() * qpow.cast<Complex>();
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) throw DomainError("oracle eigendecomposition failed");
  Eigen::VectorXcd phases(dim);
  for (int i = 0; i < dim; ++i) phases(i) = std::polar(1.0, solver.eigenvalues()(i));
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

struct VacuumValues {
  Complex g, h, prod, composed;
};

VacuumValues vacuum_values(const GroupElement& g, const GroupElement& h, int dim) {
  const Eigen::MatrixXcd ug = weyl_matrix(g, dim);
  const Eigen::MatrixXcd uh = weyl_matrix(h, dim);
  const Eigen::MatrixXcd uc = weyl_matrix(compose(g, h), dim);
  VacuumValues v;
  v.g = ug(0, 0);
  v.h = uh(0, 0);
  v.prod = (ug.row(0) * uh.col(0)).value();
  v.composed = uc(0, 0);
  return v;
}

void check_bounds(const GroupElement& e) {
  if (abs(e.u) > Rational(1)) throw DomainError("oracle requires |u| <= 1");
  for (const Rational& c : e.p.c)
    if (abs(c) > Rational(1)) throw DomainError("oracle requires |a_j| <= 1");
}

}  // namespace

OracleReport oracle_matrix_check(const GroupElement& g, const GroupElement& h, int truncation) {
  if (g.n != h.n) throw DomainError("oracle: degree bounds differ");
  if (g.n > 2) throw DomainError("oracle: degree bound must be 1 or 2");
  if (truncation < 4) throw DomainError("oracle: truncation must be at least 4");
  check_bounds(g);
  check_bounds(h);

  OracleReport r;
  r.n = g.n;
  r.truncation = truncation;

  const VacuumValues full = vacuum_values(g, h, truncation);
  const VacuumValues half = vacuum_values(g, h, truncation / 2);
  r.vac_g = full.g;
  r.vac_h = full.h;
  r.vac_prod = full.prod;
  r.vac_composed = full.composed;
  r.residual = std::max({std::abs(full.g - half.g), std::abs(full.h - half.h),
                         std::abs(full.prod - half.prod),
                         std::abs(full.composed - half.composed)});
  r.converged = r.residual <= 1e-6;

  const StateSpec spec = StateSpec::fock(g.n);
  const Region unit_interval{Interval(Rational(0), Rational(1))};
  r.formula_g = fock_eval(spec, unit_interval, g);
  r.formula_h = fock_eval(spec, unit_interval, h);
  r.formula_composed = fock_eval(spec, unit_interval, compose(g, h));
  r.err_composition = std::abs(r.vac_prod - r.vac_composed);
  r.err_state_g = std::abs(r.vac_g - r.formula_g);
  r.err_state_h = std::abs(r.vac_h - r.formula_h);
  return r;
}

}  // namespace polyweyl
