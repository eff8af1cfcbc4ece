#include "doctest.h"
#include "polyweyl/heis.hpp"

#include "../support/gen.hpp"

using namespace polyweyl;

namespace {

// Independent closed form for the degree-1 product:
// (u, a1 X + a0) o (v, b1 X + b0) = (u+v, (a1+b1) X + a0+b0+(u b1 - v a1)/2).
GroupElement weyl_oracle(const GroupElement& g, const GroupElement& h) {
  Poly p(1);
  p.c[1] = g.p.c[1] + h.p.c[1];
  p.c[0] = g.p.c[0] + h.p.c[0] + (g.u * h.p.c[1] - h.u * g.p.c[1]) / Rational(2);
  return GroupElement(1, g.u + h.u, p);
}

GroupElement make1(long long u, long long a1, const Rational& a0) {
  Poly p(1);
  p.c[1] = a1;
  p.c[0] = a0;
  return GroupElement(1, u, p);
}

}  // namespace

TEST_SUITE("heis") {

TEST_CASE("identity and inverse") {
  gen::Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    const int n = static_cast<int>(gen::pick(rng, 1, 5));
    const GroupElement g = gen::group_element(rng, n);
    const GroupElement e = identity_element(n);
    CHECK(compose(e, g) == g);
    CHECK(compose(g, e) == g);
    CHECK(compose(g, inverse(g)) == e);
    CHECK(compose(inverse(g), g) == e);
  }
  CHECK(inverse(identity_element(3)) == identity_element(3));
}

TEST_CASE("degree-1 composition matches the Weyl cocycle") {
  // (1, X) o (1, X) = (2, 2X).
  CHECK(compose(make1(1, 1, 0), make1(1, 1, 0)) == make1(2, 2, 0));
  // (1, X) o (-1, X) = (0, 2X + 1).
  CHECK(compose(make1(1, 1, 0), make1(-1, 1, 0)) == make1(0, 2, 1));
  gen::Rng rng(43);
  for (int i = 0; i < 200; ++i) {
    const GroupElement g = gen::group_element(rng, 1), h = gen::group_element(rng, 1);
    CHECK(compose(g, h) == weyl_oracle(g, h));
  }
}

TEST_CASE("documented degree-2 product") {
  // (0, X^2) o (1, 0) = (1, X^2 - X + 1/6).
  const GroupElement g(2, 0, Poly::monomial(2, 2));
  const GroupElement h(2, 1, Poly::zero(2));
  Poly expect(2);
  expect.c[2] = 1;
  expect.c[1] = -1;
  expect.c[0] = Rational(1, 6);
  CHECK(compose(g, h) == GroupElement(2, 1, expect));
}

TEST_CASE("associativity") {
  gen::Rng rng(47);
  for (int i = 0; i < 300; ++i) {
    const int n = static_cast<int>(gen::pick(rng, 1, 5));
    const GroupElement a = gen::group_element(rng, n);
    const GroupElement b = gen::group_element(rng, n);
    const GroupElement c = gen::group_element(rng, n);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
  CHECK_THROWS_AS(compose(identity_element(1), identity_element(2)), DomainError);
}

TEST_CASE("rescaling on perfect squares is exact") {
  // L=4, n=2: (u, a0 + a1 X + a2 X^2) -> (2u, 4 a0 + 2 a1 X + a2 X^2).
  gen::Rng rng(53);
  const GroupElement g = gen::group_element(rng, 2);
  const ScalarGroupElement kg = khat_apply(RescaleMap(Rational(4)), g);
  CHECK(kg.u.is_exact());
  CHECK(kg.u.exact_value() == g.u * Rational(2));
  CHECK(kg.p.c[0].exact_value() == g.p.c[0] * Rational(4));
  CHECK(kg.p.c[1].exact_value() == g.p.c[1] * Rational(2));
  CHECK(kg.p.c[2].exact_value() == g.p.c[2]);
  // L=1 is the identity map.
  const ScalarGroupElement id = khat_apply(RescaleMap(Rational(1)), g);
  CHECK(id == to_scalar_element(g));
  CHECK_THROWS_AS(RescaleMap(Rational(0)), DomainError);
  CHECK_THROWS_AS(RescaleMap(Rational(-1)), DomainError);
}

TEST_CASE("rescaling inverse and per-coefficient exactness") {
  gen::Rng rng(59);
  for (int i = 0; i < 50; ++i) {
    const int n = static_cast<int>(gen::pick(rng, 1, 4));
    const GroupElement g = gen::group_element(rng, n);
    // Perfect square: khat_inverse recovers g exactly.
    const RescaleMap m(Rational(9, 4));
    CHECK(khat_inverse(m, khat_apply(m, g)) == to_scalar_element(g));
    // Non-square length: even-index coefficients stay exact (integer powers
    // of the length), odd-index ones ride on an irrational square root.
    const ScalarGroupElement kg = khat_apply(RescaleMap(Rational(2)), g);
    for (int j = 0; j <= n; j += 2) CHECK(kg.p.c[j].is_exact());
    if (!g.u.is_zero()) CHECK(!kg.u.is_exact());
  }
}

TEST_CASE("rescaling multiplicativity") {
  gen::Rng rng(61);
  for (int i = 0; i < 50; ++i) {
    const int n = static_cast<int>(gen::pick(rng, 1, 4));
    const GroupElement g = gen::group_element(rng, n);
    // Exact on perfect squares.
    const ScalarGroupElement two_steps =
        khat_apply(RescaleMap(Rational(4)), khat_apply(RescaleMap(Rational(9)), g));
    CHECK(two_steps == khat_apply(RescaleMap(Rational(36)), g));
    // Approximate in general.
    const ScalarGroupElement a =
        khat_apply(RescaleMap(Rational(2)), khat_apply(RescaleMap(Rational(3, 2)), g));
    const ScalarGroupElement b = khat_apply(RescaleMap(Rational(3)), g);
    CHECK(approx_equal(a, b, 1e-12));
  }
}

TEST_CASE("rescaling is a group automorphism") {
  gen::Rng rng(67);
  for (int i = 0; i < 60; ++i) {
    const int n = static_cast<int>(gen::pick(rng, 1, 5));
    const GroupElement g = gen::group_element(rng, n, 4, 4);
    const GroupElement h = gen::group_element(rng, n, 4, 4);
    // Exact on a perfect-square length.
    const RescaleMap sq(Rational(9, 16));
    CHECK(khat_apply(sq, compose(g, h)) ==
          compose(khat_apply(sq, g), khat_apply(sq, h)));
    // Within 1e-9 on a non-square length.
    const RescaleMap ns(Rational(3));
    CHECK(approx_equal(khat_apply(ns, compose(g, h)),
                       compose(khat_apply(ns, g), khat_apply(ns, h)), 1e-9));
  }
}

TEST_CASE("transport intertwining identities") {
  // khat o T_u = T_{u sqrt(L)} o khat and the three companions, exact on
  // perfect-square lengths.
  gen::Rng rng(71);
  const std::vector<Rational> lengths{Rational(1, 4), Rational(1), Rational(4), Rational(9)};
  for (const Rational& len : lengths) {
    const RescaleMap m(len);
    const RescaleMap minv(Rational(1) / len);
    const Scalar root = pow_half_int(len, 1);
    const Scalar root_inv = pow_half_int(len, -1);
    for (int i = 0; i < 25; ++i) {
      const int n = static_cast<int>(gen::pick(rng, 1, 4));
      const Poly p = gen::poly(rng, n);
      const Rational u = gen::rational(rng);
      const ScalarPoly kp = khat_poly(m, p);
      const ScalarPoly kp_inv = khat_poly(minv, p);
      const Scalar su = Scalar(u);
      CHECK(khat_poly(m, t_apply(u, p)) == t_apply(su * root, kp));
      CHECK(khat_poly(minv, t_inv_apply(u, p)) == t_inv_apply(su * root_inv, kp_inv));
      CHECK(khat_poly(m, t_inv_apply(u, p)) == t_inv_apply(su * root, kp));
      CHECK(khat_poly(minv, t_apply(u, p)) == t_apply(su * root_inv, kp_inv));
    }
  }
}

}  // TEST_SUITE
