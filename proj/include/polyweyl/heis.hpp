#pragma once

#include "polyweyl/poly.hpp"

namespace polyweyl {

// Group element (u, P) of the 1-mode degree-n polynomial Heisenberg group:
// u along the momentum direction, P a polynomial of degree bound n.
template <class S>
struct BasicGroupElement {
  int n = 1;
  S u = S(0);
  BasicPoly<S> p;

  BasicGroupElement() : p(1) {}
  BasicGroupElement(int bound, S momentum, BasicPoly<S> poly)
      : n(bound), u(std::move(momentum)), p(std::move(poly)) {
    if (n < 1) throw DomainError("degree bound must be >= 1");
    if (p.n != n) throw DomainError("group element polynomial has mismatched degree bound");
  }

  friend bool operator==(const BasicGroupElement& a, const BasicGroupElement& b) {
    return a.n == b.n && a.u == b.u && a.p == b.p;
  }
  friend bool operator!=(const BasicGroupElement& a, const BasicGroupElement& b) {
    return !(a == b);
  }
};

using GroupElement = BasicGroupElement<Rational>;
using ScalarGroupElement = BasicGroupElement<Scalar>;

inline ScalarGroupElement to_scalar_element(const GroupElement& g) {
  return ScalarGroupElement(g.n, Scalar(g.u), to_scalar_poly(g.p));
}

// Total order on exact group elements; used as the canonical key order for
// algebra terms and tensor words.
inline bool operator<(const GroupElement& a, const GroupElement& b) {
  if (a.n != b.n) return a.n < b.n;
  if (a.u != b.u) return a.u < b.u;
  for (int j = 0; j <= a.n; ++j)
    if (a.p.c[j] != b.p.c[j]) return a.p.c[j] < b.p.c[j];
  return false;
}

inline GroupElement identity_element(int n) { return GroupElement(n, 0, Poly::zero(n)); }

// (u,P) o (v,Q) = (u+v, T^{-1}_{u+v}(T_u P + T_v S_u Q)), evaluated exactly.
template <class S>
BasicGroupElement<S> compose(const BasicGroupElement<S>& g, const BasicGroupElement<S>& h) {
  if (g.n != h.n) throw DomainError("compose: degree bounds differ");
  const S w = g.u + h.u;
  return BasicGroupElement<S>(
      g.n, w, t_inv_apply(w, t_apply(g.u, g.p) + t_apply(h.u, s_apply(g.u, h.p))));
}

template <class S>
BasicGroupElement<S> inverse(const BasicGroupElement<S>& g) {
  return BasicGroupElement<S>(g.n, -g.u, -g.p);
}

// Interval-length rescaling map: u -> u L^{1/2}, a_j -> a_j L^{1-j/2}.
struct RescaleMap {
  Rational length;
  explicit RescaleMap(const Rational& l) : length(l) {
    if (l <= 0) throw DomainError("rescale length must be positive");
  }
};

template <class S>
ScalarPoly khat_poly(const RescaleMap& m, const BasicPoly<S>& p) {
  ScalarPoly r(p.n);
  for (int j = 0; j <= p.n; ++j) r.c[j] = Scalar(p.c[j]) * pow_half_int(m.length, 2 - j);
  return r;
}

template <class S>
ScalarGroupElement khat_apply(const RescaleMap& m, const BasicGroupElement<S>& g) {
  return ScalarGroupElement(g.n, Scalar(g.u) * pow_half_int(m.length, 1), khat_poly(m, g.p));
}

template <class S>
ScalarGroupElement khat_inverse(const RescaleMap& m, const BasicGroupElement<S>& g) {
  return khat_apply(RescaleMap(Rational(1) / m.length), g);
}

inline bool approx_equal(const ScalarPoly& a, const ScalarPoly& b, double tol) {
  if (a.n != b.n) return false;
  for (int j = 0; j <= a.n; ++j)
    if (!approx_equal(a.c[j], b.c[j], tol)) return false;
  return true;
}

inline bool approx_equal(const ScalarGroupElement& a, const ScalarGroupElement& b, double tol) {
  return a.n == b.n && approx_equal(a.u, b.u, tol) && approx_equal(a.p, b.p, tol);
}

}  // namespace polyweyl
