#include "polyweyl/fock.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <set>

namespace polyweyl {

StateSpec::StateSpec(int n, Weight kind, StepFunction density)
    : n_(n), kind_(kind), density_(std::move(density)) {
  if (n < 1 || n > 2) throw DomainError("state degree bound must be 1 or 2");
  if (kind_ != Weight::unit && n != 1)
    throw DomainError("weighted states are defined only in degree 1");
}

StateSpec StateSpec::fock(int n) { return StateSpec(n, Weight::unit, StepFunction()); }

StateSpec StateSpec::weighted(int n, StepFunction density) {
  for (const auto& piece : density.pieces())
    if (piece.val <= 0)
      throw DomainError("density must be strictly positive on its support");
  return StateSpec(n, Weight::density, std::move(density));
}

StateSpec StateSpec::length_weighted(int n) {
  return StateSpec(n, Weight::length, StepFunction());
}

Rational StateSpec::weight(const Region& i) const {
  if (i.empty()) throw DomainError("weight of an empty region");
  switch (kind_) {
    case Weight::unit:
      return Rational(1);
    case Weight::length:
      return i.length();
    case Weight::density:
      return density_.integral_over(i) / i.length();
  }
  throw DomainError("unknown weight kind");
}

FockQuadParams FockQuadParams::from_element(const GroupElement& g) {
  if (g.n != 2) throw DomainError("quadratic parameters require degree bound 2");
  FockQuadParams qp;
  qp.a = (g.p.c[2] / Rational(2)).to_double();
  qp.b = g.p.c[1].to_double() / std::sqrt(2.0);
  qp.c = g.u.to_double() / std::sqrt(2.0);
  qp.m = Complex(qp.b, qp.c);
  return qp;
}

Complex fock_eval_n1(const StateSpec& spec, const Region& i, const GroupElement& g) {
  if (spec.n() != 1) throw DomainError("degree-1 evaluation requires a degree-1 state");
  if (g.n != 1) throw DomainError("degree-1 evaluation requires a degree-1 element");
  if (i.empty()) throw DomainError("evaluation region is empty");
  const Rational t = spec.weight(i) * i.length();  // a_I |I|, exact
  const double td = t.to_double();
  const double u = g.u.to_double();
  const double a1 = g.p.c[1].to_double();
  const double modulus = std::exp(-td * (u * u + a1 * a1) / 4.0);
  return std::polar(modulus, g.p.c[0].to_double() * td);
}

Complex fock_eval_n2(const Region& i, const GroupElement& g) {
  if (g.n != 2) throw DomainError("degree-2 evaluation requires a degree-2 element");
  if (i.empty()) throw DomainError("evaluation region is empty");
  const FockQuadParams qp = FockQuadParams::from_element(g);
  const double len = i.length().to_double();
  const Complex one_m2ia(1.0, -2.0 * qp.a);  // 1 - 2iA, real part 1 > 0
  const Complex prefactor = 1.0 / complex_principal_sqrt(one_m2ia);
  const Complex quad(qp.a * qp.a, 2.0 * qp.a);  // A^2 + 2iA
  const Complex exponent =
      (4.0 * qp.c * qp.c * quad - 3.0 * std::norm(qp.m)) / (6.0 * one_m2ia) * len;
  return prefactor * std::exp(exponent) * std::polar(1.0, g.p.c[0].to_double() * len);
}

Complex fock_eval(const StateSpec& spec, const Region& i, const GroupElement& g) {
  if (g.n != spec.n()) throw DomainError("state and element degree bounds differ");
  if (spec.n() == 1) return fock_eval_n1(spec, i, g);
  if (spec.kind() != StateSpec::Weight::unit)
    throw DomainError("weighted states are defined only in degree 1");
  return fock_eval_n2(i, g);
}

GroupElement reduce_degree_bound(const GroupElement& g, int m) {
  if (m < 1 || m > g.n) throw DomainError("invalid target degree bound");
  for (int k = m + 1; k <= g.n; ++k)
    if (!g.p.c[k].is_zero())
      throw DomainError("element does not lie in the lower-degree subgroup");
  Poly p = Poly::zero(m);
  for (int k = 0; k <= m; ++k) p.c[k] = g.p.c[k];
  return GroupElement(m, g.u, std::move(p));
}

Complex state_eval(const StateSpec& spec, const TensorElement& t) {
  if (spec.n() != t.n()) throw DomainError("state and tensor word degree bounds differ");
  Complex total(0);
  for (const TensorElement::Word& w : t.words()) {
    Complex value = w.coeff;
    for (std::size_t j = 0; j < w.factors.size(); ++j)
      value *= fock_eval(spec, t.partition().cells()[j], w.factors[j]);
    total += value;
  }
  return total;
}

FactorCheck factor_check(const StateSpec& spec, const Region& i, const Partition& pi,
                         const GroupElement& g) {
  if (pi.of() != i) throw DomainError("partition does not partition the given region");
  FactorCheck fc;
  fc.whole = fock_eval(spec, i, g);
  fc.product = Complex(1);
  for (const Region& cell : pi.cells()) fc.product *= fock_eval(spec, cell, g);
  fc.defect = std::abs(fc.whole - fc.product);
  return fc;
}

double gram_min_eigenvalue(const StateSpec& spec, const std::vector<GroupElement>& elems,
                           const Region& i) {
  if (elems.empty()) throw DomainError("gram matrix of an empty set");
  if (elems.size() > 8) throw DomainError("gram matrix limited to 8 elements");
  const int k = static_cast<int>(elems.size());
  Eigen::MatrixXcd m(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c)
      m(r, c) = fock_eval(spec, i, compose(inverse(elems[r]), elems[c]));
  const Eigen::MatrixXcd herm = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
  if (solver.info() != Eigen::Success) throw DomainError("eigenvalue computation failed");
  return solver.eigenvalues().minCoeff();
}

namespace {

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

long long pick(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

Rational rand_rational(std::mt19937_64& rng, long long bound = 16) {
  return Rational(pick(rng, -bound, bound), pick(rng, 1, bound));
}

// Interval with endpoints on the 1/16 grid inside [-8, 8), length <= 8.
Interval rand_interval(std::mt19937_64& rng) {
  const long long lo16 = pick(rng, -128, 127);
  const long long len16 = pick(rng, 1, 128);
  return Interval(Rational(lo16, 16), Rational(lo16 + len16, 16));
}

// Random interval partition with cuts on the 1/32 grid, at most max_cells cells.
Partition rand_partition(std::mt19937_64& rng, const Interval& iv, int max_cells) {
  const long long lo32 = (iv.lo * 32).num().convert_to<long long>();
  const long long hi32 = (iv.hi * 32).num().convert_to<long long>();
  const long long interior = hi32 - lo32 - 1;  // candidate cut points
  long long cuts = pick(rng, 0, max_cells - 1);
  if (cuts > interior) cuts = interior;
  std::set<long long> chosen;
  while (static_cast<long long>(chosen.size()) < cuts)
    chosen.insert(pick(rng, lo32 + 1, hi32 - 1));
  std::vector<Region> cells;
  long long prev = lo32;
  for (long long cut : chosen) {
    cells.emplace_back(Interval(Rational(prev, 32), Rational(cut, 32)));
    prev = cut;
  }
  cells.emplace_back(Interval(Rational(prev, 32), Rational(hi32, 32)));
  return Partition::build(Region(iv), std::move(cells));
}

GroupElement rand_element(std::mt19937_64& rng, int n, bool zero_top) {
  Poly p = Poly::zero(n);
  for (int k = 0; k <= n; ++k) p.c[k] = rand_rational(rng);
  if (zero_top) p.c[n] = Rational(0);
  return GroupElement(n, rand_rational(rng), std::move(p));
}

// Split into `cells` equal-length subintervals (exact rational cuts).
Partition equal_split(const Interval& iv, int cells) {
  std::vector<Region> parts;
  const Rational step = iv.length() / Rational(cells);
  Rational lo = iv.lo;
  for (int j = 0; j < cells; ++j) {
    const Rational hi = (j + 1 == cells) ? iv.hi : lo + step;
    parts.emplace_back(Interval(lo, hi));
    lo = hi;
  }
  return Partition::build(Region(iv), std::move(parts));
}

}  // namespace

NogoReport nogo_experiment(int n, int trials, std::uint64_t seed, double defect_tolerance,
                           double ratio_tolerance, const std::vector<Rational>& a_grid,
                           const std::vector<int>& cell_grid) {
  if (n < 1 || n > 3) throw DomainError("experiment degree bound must be 1, 2, or 3");
  if (trials < 1) throw DomainError("experiment requires at least one trial");

  NogoReport report;
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  report.defect_tolerance = defect_tolerance;
  report.ratio_tolerance = ratio_tolerance;

  std::mt19937_64 rng(seed);
  const StateSpec spec = StateSpec::fock(n == 1 ? 1 : 2);
  bool identities = true;

  // Defect sweep. Degree 1: the defect is the identity under test. Degree 2:
  // the defect is genuinely large — that IS the result — and the identity
  // under test is the ratio law below. Degree 3 sweeps the embedded degree-2
  // copy (vanishing cubic coefficient).
  for (int trial = 0; trial < trials; ++trial) {
    const Interval iv = rand_interval(rng);
    const Partition pi = rand_partition(rng, iv, 6);
    GroupElement g = rand_element(rng, n, /*zero_top=*/n == 3);
    if (n == 3) g = reduce_degree_bound(g, 2);
    const double defect = factorizability_defect(spec, Region(iv), pi, g);
    if (defect > report.max_defect) report.max_defect = defect;
  }
  if (n == 1) identities = report.max_defect < defect_tolerance;

  if (n >= 2) {
    // Ratio law: product of cell values over the whole value must equal
    // (1-2iA)^{-(|pi|-1)/2} for elements with quadratic coefficient 2A.
    for (const Rational& a : a_grid) {
      for (int cells : cell_grid) {
        const Interval iv = rand_interval(rng);
        const Partition pi = equal_split(iv, cells);
        Poly p = Poly::zero(2);
        p.c[0] = rand_rational(rng);
        p.c[1] = rand_rational(rng);
        p.c[2] = a * Rational(2);
        GroupElement g(2, rand_rational(rng), std::move(p));
        if (n == 3) {
          // Route through the bigger group and back, as the containment
          // argument does.
          Poly lifted = Poly::zero(3);
          for (int k = 0; k <= 2; ++k) lifted.c[k] = g.p.c[k];
          g = reduce_degree_bound(GroupElement(3, g.u, std::move(lifted)), 2);
        }
        const FactorCheck fc = factor_check(spec, Region(iv), pi, g);
        RatioCheck rc;
        rc.a = a.to_double();
        rc.cells = cells;
        rc.measured = fc.product / fc.whole;
        const Complex root = complex_principal_sqrt(Complex(1.0, -2.0 * a.to_double()));
        rc.predicted = std::pow(root, -(cells - 1));
        rc.abs_err = std::abs(rc.measured - rc.predicted);
        if (rc.abs_err > ratio_tolerance) identities = false;
        report.ratio_checks.push_back(rc);
      }
    }
  }

  if (n == 3) {
    // Composition in the degree-3 group restricts exactly to the embedded
    // degree-2 subgroup.
    for (int trial = 0; trial < trials; ++trial) {
      const GroupElement x = rand_element(rng, 2, false);
      const GroupElement y = rand_element(rng, 2, false);
      auto lift = [](const GroupElement& e) {
        Poly p = Poly::zero(3);
        for (int k = 0; k <= 2; ++k) p.c[k] = e.p.c[k];
        return GroupElement(3, e.u, std::move(p));
      };
      const GroupElement big = compose(lift(x), lift(y));
      if (reduce_degree_bound(big, 2) != compose(x, y)) identities = false;
    }
  }

  report.identities_hold = identities;
  return report;
}

}  // namespace polyweyl
