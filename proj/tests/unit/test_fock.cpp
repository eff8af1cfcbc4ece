#include <cmath>
#include <complex>

#include "doctest.h"
#include "polyweyl/fock.hpp"

#include "../support/gen.hpp"

using namespace polyweyl;

namespace {

Interval iv(long long lo, long long hi) { return Interval(Rational(lo), Rational(hi)); }

GroupElement elem1(const Rational& u, const Rational& a0, const Rational& a1) {
  Poly p = Poly::zero(1);
  p.c[0] = a0;
  p.c[1] = a1;
  return GroupElement(1, u, std::move(p));
}

GroupElement elem2(const Rational& u, const Rational& a0, const Rational& a1,
                   const Rational& a2) {
  Poly p = Poly::zero(2);
  p.c[0] = a0;
  p.c[1] = a1;
  p.c[2] = a2;
  return GroupElement(2, u, std::move(p));
}

bool close(const Complex& a, const Complex& b, double tol = 1e-12) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

TEST_SUITE("fock") {

TEST_CASE("region weights") {
  const Region i01(iv(0, 1));
  CHECK(StateSpec::fock(1).weight(i01) == Rational(1));
  CHECK(StateSpec::fock(2).weight(Region(iv(-3, 5))) == Rational(1));

  const StateSpec two = StateSpec::weighted(1, StepFunction::indicator(i01, Rational(2)));
  CHECK(two.weight(i01) == Rational(2));

  const StepFunction steps = StepFunction::indicator(Region(iv(0, 1)), Rational(1)) +
                             StepFunction::indicator(Region(iv(1, 2)), Rational(3));
  CHECK(StateSpec::weighted(1, steps).weight(Region(iv(0, 2))) == Rational(2));

  CHECK(StateSpec::length_weighted(1).weight(Region(iv(2, 7))) == Rational(5));

  CHECK_THROWS_AS(StateSpec::fock(1).weight(Region::from_intervals({})), DomainError);
  CHECK_THROWS_AS(StateSpec::fock(3), DomainError);
  CHECK_THROWS_AS(StateSpec::weighted(2, StepFunction::indicator(i01)), DomainError);
  CHECK_THROWS_AS(StateSpec::length_weighted(2), DomainError);
  CHECK_THROWS_AS(StateSpec::weighted(1, StepFunction::indicator(i01, Rational(-1))),
                  DomainError);
}

TEST_CASE("degree-1 vacuum values") {
  const StateSpec spec = StateSpec::fock(1);
  const Region i01(iv(0, 1));
  CHECK(fock_eval_n1(spec, i01, elem1(0, 0, 0)) == Complex(1));
  CHECK(close(fock_eval_n1(spec, i01, elem1(2, 0, 0)), Complex(std::exp(-1.0))));
  CHECK(close(fock_eval_n1(spec, i01, elem1(0, 1, 0)),
              Complex(std::cos(1.0), std::sin(1.0))));
  // Modulus from u and a1, phase from a0, both scaled by a_I |I|.
  const Complex v = fock_eval_n1(spec, Region(iv(0, 3)), elem1(1, Rational(1, 2), 1));
  CHECK(std::abs(v) == doctest::Approx(std::exp(-3.0 * 2.0 / 4.0)).epsilon(1e-12));
  CHECK(std::arg(v) == doctest::Approx(1.5).epsilon(1e-12));

  CHECK_THROWS_AS(fock_eval_n1(spec, Region::from_intervals({}), elem1(0, 0, 0)), DomainError);
  CHECK_THROWS_AS(fock_eval_n1(StateSpec::fock(2), i01, elem2(0, 0, 0, 0)), DomainError);
}

TEST_CASE("degree-1 involution symmetry") {
  // The state of the inverse is the conjugate value.
  gen::Rng rng(211);
  const StateSpec spec = StateSpec::fock(1);
  for (int i = 0; i < 100; ++i) {
    const GroupElement g = elem1(gen::rational(rng), gen::rational(rng), gen::rational(rng));
    const Region r(gen::interval(rng));
    CHECK(close(fock_eval_n1(spec, r, inverse(g)), std::conj(fock_eval_n1(spec, r, g))));
  }
}

TEST_CASE("degree-2 vacuum values") {
  const Region i01(iv(0, 1));
  CHECK(fock_eval_n2(i01, elem2(0, 0, 0, 0)) == Complex(1));

  // Quadratic coefficient 2 (A = 1), unit interval: (1-2i)^{-1/2}.
  const Complex v = fock_eval_n2(i01, elem2(0, 0, 0, 2));
  CHECK(v.real() == doctest::Approx(0.5688644810057831).epsilon(1e-12));
  CHECK(v.imag() == doctest::Approx(0.3515775842541429).epsilon(1e-12));
  CHECK(std::abs(v) == doctest::Approx(std::pow(5.0, -0.25)).epsilon(1e-12));

  // Vanishing quadratic coefficient reduces to the degree-1 formula.
  gen::Rng rng(223);
  const StateSpec spec1 = StateSpec::fock(1);
  for (int i = 0; i < 100; ++i) {
    const Rational u = gen::rational(rng), a0 = gen::rational(rng), a1 = gen::rational(rng);
    const Region r(gen::interval(rng));
    CHECK(close(fock_eval_n2(r, elem2(u, a0, a1, 0)), fock_eval_n1(spec1, r, elem1(u, a0, a1))));
  }
}

TEST_CASE("state values are normalized and contractive") {
  gen::Rng rng(227);
  for (int i = 0; i < 200; ++i) {
    const int n = static_cast<int>(gen::pick(rng, 1, 2));
    const StateSpec spec = StateSpec::fock(n);
    const Region r(gen::interval(rng));
    CHECK(fock_eval(spec, r, identity_element(n)) == Complex(1));
    const GroupElement g = gen::group_element(rng, n);
    CHECK(std::abs(fock_eval(spec, r, g)) <= 1.0 + 1e-12);
  }
}

TEST_CASE("degree bound reduction") {
  Poly p = Poly::zero(3);
  p.c[0] = Rational(1, 2);
  p.c[1] = Rational(-2);
  const GroupElement g(3, Rational(1), p);
  const GroupElement r = reduce_degree_bound(g, 1);
  CHECK(r.n == 1);
  CHECK(r.u == Rational(1));
  CHECK(r.p.c == std::vector<Rational>{Rational(1, 2), Rational(-2)});
  CHECK(reduce_degree_bound(g, 3) == g);

  Poly q = Poly::monomial(3, 3);
  CHECK_THROWS_AS(reduce_degree_bound(GroupElement(3, 0, q), 2), DomainError);
  CHECK_THROWS_AS(reduce_degree_bound(g, 0), DomainError);
  CHECK_THROWS_AS(reduce_degree_bound(g, 4), DomainError);
}

TEST_CASE("tensor word evaluation") {
  const Region whole(iv(0, 2));
  const Partition halves =
      Partition::build(whole, {Region(iv(0, 1)), Region(iv(1, 2))});
  const StateSpec spec1 = StateSpec::fock(1);

  CHECK(state_eval(spec1, TensorElement::unit(1, halves)) == Complex(1));

  // Diagonal embedding of a degree-1 generator: equals the whole-interval value.
  gen::Rng rng(229);
  for (int i = 0; i < 50; ++i) {
    const GroupElement g = gen::group_element(rng, 1);
    const TensorElement t = embed_generator(
        halves, LocalizedElement(whole, AlgebraElement::generator(g)));
    CHECK(close(state_eval(spec1, t), fock_eval(spec1, whole, g)));
  }

  // Degree 2: the same embedding differs from the whole value by exactly the
  // square-root prefactor — the no-go in one line.
  const GroupElement q2 = elem2(0, 0, 0, 2);
  const TensorElement t2 = embed_generator(
      halves, LocalizedElement(whole, AlgebraElement::generator(q2)));
  const Complex whole_value = fock_eval_n2(whole, q2);
  const Complex ratio = state_eval(StateSpec::fock(2), t2) / whole_value;
  const Complex predicted = 1.0 / complex_principal_sqrt(Complex(1, -2));
  CHECK(close(ratio, predicted));
  CHECK(std::abs(std::abs(ratio) - std::pow(5.0, -0.25)) < 1e-12);

  // Linearity over words.
  const TensorElement sum = t2.scaled(Complex(0, 2)) + TensorElement::unit(2, halves);
  CHECK(close(state_eval(StateSpec::fock(2), sum),
              Complex(0, 2) * state_eval(StateSpec::fock(2), t2) + Complex(1)));

  CHECK_THROWS_AS(state_eval(spec1, t2), DomainError);
}

TEST_CASE("factorization defect in degree 1 vanishes") {
  gen::Rng rng(233);
  const StateSpec spec = StateSpec::fock(1);
  for (int i = 0; i < 200; ++i) {
    const Interval whole = gen::interval(rng);
    const Partition pi = gen::interval_partition(rng, whole);
    const GroupElement g = gen::group_element(rng, 1);
    CHECK(factorizability_defect(spec, Region(whole), pi, g) < 1e-12);
  }
}

TEST_CASE("factorization defect in degree 2 is an invariant of the split") {
  // A = 1, unit interval, halves: |(1-2i)^{-1/2} - (1-2i)^{-1}|.
  const Region whole(iv(0, 1));
  const Partition halves = Partition::build(
      whole, {Region(Interval(Rational(0), Rational(1, 2))),
              Region(Interval(Rational(1, 2), Rational(1)))});
  const FactorCheck fc = factor_check(StateSpec::fock(2), whole, halves, elem2(0, 0, 0, 2));
  CHECK(fc.defect == doctest::Approx(0.37202921349583606).epsilon(1e-9));

  // No split, nothing to violate.
  CHECK(factorizability_defect(StateSpec::fock(2), whole, Partition::trivial(whole),
                               elem2(0, 0, 0, 2)) < 1e-15);

  // Partition of a different region is rejected.
  CHECK_THROWS_AS(factor_check(StateSpec::fock(2), Region(iv(0, 2)), halves, elem2(0, 0, 0, 2)),
                  DomainError);
}

TEST_CASE("weighted states factorize exactly when the weight is additive") {
  gen::Rng rng(239);
  // Piecewise-constant density: t(I) = integral_I p is additive, so the
  // defect stays at rounding level.
  const StepFunction density = StepFunction::indicator(Region(iv(-8, 0)), Rational(1, 3)) +
                               StepFunction::indicator(Region(iv(0, 8)), Rational(5, 2));
  const StateSpec spec = StateSpec::weighted(1, density);
  for (int i = 0; i < 100; ++i) {
    const Interval whole = gen::interval(rng);
    const Partition pi = gen::interval_partition(rng, whole);
    const GroupElement g = gen::group_element(rng, 1);
    CHECK(factorizability_defect(spec, Region(whole), pi, g) < 1e-12);
  }

  // The non-additive weight a_I = |I| breaks factorization by a computable
  // amount: u=2 over [0,1) split in halves gives |e^{-1/2} - e^{-1}|.
  const Region whole(iv(0, 1));
  const Partition halves = Partition::build(
      whole, {Region(Interval(Rational(0), Rational(1, 2))),
              Region(Interval(Rational(1, 2), Rational(1)))});
  const double defect =
      factorizability_defect(StateSpec::length_weighted(1), whole, halves, elem1(2, 0, 0));
  CHECK(defect == doctest::Approx(0.23865121854119116).epsilon(1e-9));
  CHECK(std::abs(defect - 0.2387) < 1e-4);
}

TEST_CASE("translation covariance for constant densities") {
  gen::Rng rng(241);
  const StepFunction const_density = StepFunction::indicator(Region(iv(-32, 32)), Rational(3));
  for (int i = 0; i < 50; ++i) {
    const Interval whole = gen::interval(rng);
    const Partition pi = gen::interval_partition(rng, whole);
    const Rational shift = gen::rational(rng);
    const GroupElement g1 = gen::group_element(rng, 1);
    const GroupElement g2 = gen::group_element(rng, 2);

    auto translate_region = [&](const Region& r) {
      std::vector<Interval> parts;
      for (const Interval& part : r.parts())
        parts.emplace_back(part.lo + shift, part.hi + shift);
      return Region::from_intervals(parts);
    };
    const Region moved = translate_region(Region(whole));
    std::vector<Region> moved_cells;
    for (const Region& cell : pi.cells()) moved_cells.push_back(translate_region(cell));
    const Partition moved_pi = Partition::build(moved, std::move(moved_cells));

    for (const StateSpec& spec :
         {StateSpec::fock(1), StateSpec::weighted(1, const_density)}) {
      const FactorCheck before = factor_check(spec, Region(whole), pi, g1);
      const FactorCheck after = factor_check(spec, moved, moved_pi, g1);
      // Bit-identical, not merely close.
      CHECK(before.whole == after.whole);
      CHECK(before.product == after.product);
    }
    const FactorCheck before2 = factor_check(StateSpec::fock(2), Region(whole), pi, g2);
    const FactorCheck after2 = factor_check(StateSpec::fock(2), moved, moved_pi, g2);
    CHECK(before2.whole == after2.whole);
    CHECK(before2.product == after2.product);
  }
}

TEST_CASE("gram matrices stay positive") {
  const Region i01(iv(0, 1));
  CHECK(gram_min_eigenvalue(StateSpec::fock(1), {identity_element(1)}, i01) ==
        doctest::Approx(1.0).epsilon(1e-12));

  gen::Rng rng(251);
  for (int i = 0; i < 100; ++i) {
    const int n = static_cast<int>(gen::pick(rng, 1, 2));
    const int count = static_cast<int>(gen::pick(rng, 1, 6));
    std::vector<GroupElement> elems;
    for (int j = 0; j < count; ++j) elems.push_back(gen::group_element(rng, n));
    const Region r(gen::interval(rng));
    CHECK(gram_min_eigenvalue(StateSpec::fock(n), elems, r) >= -1e-9);
  }

  std::vector<GroupElement> too_many(9, identity_element(1));
  CHECK_THROWS_AS(gram_min_eigenvalue(StateSpec::fock(1), too_many, i01), DomainError);
  CHECK_THROWS_AS(gram_min_eigenvalue(StateSpec::fock(1), {}, i01), DomainError);
}

TEST_CASE("experiment: degree 1 factorizes") {
  const NogoReport r = nogo_experiment(1, 200, 7);
  CHECK(r.n == 1);
  CHECK(r.trials == 200);
  CHECK(r.seed == 7);
  CHECK(r.max_defect < 1e-12);
  CHECK(r.identities_hold);
  CHECK(r.ratio_checks.empty());
}

TEST_CASE("experiment: degree 2 obeys the ratio law and fails to factorize") {
  const NogoReport r = nogo_experiment(2, 50, 11);
  CHECK(r.identities_hold);
  CHECK(r.max_defect > 1e-2);  // the no-go: defects are genuinely large
  CHECK(r.ratio_checks.size() == 12);  // 4 grid values x 3 cell counts
  for (const RatioCheck& rc : r.ratio_checks) {
    CHECK(rc.abs_err <= 1e-9);
    if (rc.a == 1.0 && rc.cells == 2)
      CHECK(std::abs(rc.measured) == doctest::Approx(std::pow(5.0, -0.25)).epsilon(1e-9));
  }
}

TEST_CASE("experiment: degree 3 inherits the degree-2 failure") {
  const NogoReport r = nogo_experiment(3, 50, 13);
  CHECK(r.identities_hold);  // ratio law + subgroup consistency
  CHECK(r.max_defect > 1e-2);
  CHECK(r.ratio_checks.size() == 12);
}

TEST_CASE("experiment is deterministic") {
  const NogoReport a = nogo_experiment(2, 25, 99);
  const NogoReport b = nogo_experiment(2, 25, 99);
  CHECK(a.max_defect == b.max_defect);
  REQUIRE(a.ratio_checks.size() == b.ratio_checks.size());
  for (std::size_t i = 0; i < a.ratio_checks.size(); ++i) {
    CHECK(a.ratio_checks[i].measured == b.ratio_checks[i].measured);
    CHECK(a.ratio_checks[i].predicted == b.ratio_checks[i].predicted);
  }
  CHECK_THROWS_AS(nogo_experiment(4, 10, 1), DomainError);
  CHECK_THROWS_AS(nogo_experiment(1, 0, 1), DomainError);
}

}  // TEST_SUITE
