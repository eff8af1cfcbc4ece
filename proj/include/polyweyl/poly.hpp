#pragma once

#include <vector>

#include "polyweyl/scalar.hpp"

namespace polyweyl {

// Real polynomial of degree <= n with coefficient c[j] on X^j. The degree
// bound is structural: trailing zeros are kept, and values with different
// bounds are combined/compared by zero-padding to the larger bound.
template <class S>
struct BasicPoly {
  int n = 0;
  std::vector<S> c;

  BasicPoly() : c(1, S(0)) {}
  explicit BasicPoly(int bound) : n(bound), c(bound + 1, S(0)) {
    if (bound < 0) throw DomainError("negative degree bound");
  }
  BasicPoly(int bound, std::vector<S> coeffs) : n(bound), c(std::move(coeffs)) {
    if (bound < 0) throw DomainError("negative degree bound");
    if (static_cast<int>(c.size()) != bound + 1)
      throw DomainError("polynomial must carry exactly n+1 coefficients");
  }

  static BasicPoly zero(int bound) { return BasicPoly(bound); }
  static BasicPoly monomial(int bound, int j, const S& coeff = S(1)) {
    BasicPoly p(bound);
    if (j < 0 || j > bound) throw DomainError("monomial exponent outside degree bound");
    p.c[j] = coeff;
    return p;
  }

  BasicPoly padded_to(int bound) const {
    if (bound < n) throw DomainError("cannot pad polynomial to a smaller bound");
    BasicPoly p(bound);
    for (int j = 0; j <= n; ++j) p.c[j] = c[j];
    return p;
  }

  BasicPoly operator-() const {
    BasicPoly p(n);
    for (int j = 0; j <= n; ++j) p.c[j] = -c[j];
    return p;
  }

  friend BasicPoly operator+(const BasicPoly& a, const BasicPoly& b) {
    const int m = std::max(a.n, b.n);
    BasicPoly r(m);
    for (int j = 0; j <= a.n; ++j) r.c[j] += a.c[j];
    for (int j = 0; j <= b.n; ++j) r.c[j] += b.c[j];
    return r;
  }
  friend BasicPoly operator-(const BasicPoly& a, const BasicPoly& b) { return a + (-b); }

  BasicPoly scaled(const S& s) const {
    BasicPoly p(n);
    for (int j = 0; j <= n; ++j) p.c[j] = c[j] * s;
    return p;
  }

  bool is_zero() const {
    for (const S& v : c)
      if (!v.is_zero()) return false;
    return true;
  }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
    const int m = std::max(a.n, b.n);
    auto at = [m](const BasicPoly& p, int j) { return j <= p.n ? p.c[j] : S(0); };
    for (int j = 0; j <= m; ++j)
      if (!(at(a, j) == at(b, j))) return false;
    return true;
  }
  friend bool operator!=(const BasicPoly& a, const BasicPoly& b) { return !(a == b); }
};

using Poly = BasicPoly<Rational>;
using ScalarPoly = BasicPoly<Scalar>;

inline ScalarPoly to_scalar_poly(const Poly& p) {
  ScalarPoly r(p.n);
  for (int j = 0; j <= p.n; ++j) r.c[j] = Scalar(p.c[j]);
  return r;
}

inline BigInt factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Coefficient of X^h in the image of X^k under the transport operator:
// k! / ((k+1-h)! h!) for 0 <= h < k. Deliberately not a binomial.
inline Rational transport_coefficient(int k, int h) {
  if (k < 1 || h < 0 || h >= k) throw DomainError("transport coefficient index out of range");
  return Rational(factorial(k), factorial(k + 1 - h) * factorial(h));
}

inline Rational binomial(int k, int h) {
  return Rational(factorial(k), factorial(h) * factorial(k - h));
}

namespace detail {
template <class S>
std::vector<S> powers_of(const S& w, int up_to) {
  std::vector<S> pw(up_to + 1, S(1));
  for (int i = 1; i <= up_to; ++i) pw[i] = pw[i - 1] * w;
  return pw;
}
}  // namespace detail

// T_w: X^k -> sum_{h<k} [k!/((k+1-h)! h!)] w^{k-h} X^h + X^k, T_w 1 = 1.
// Unipotent: identity plus strictly degree-lowering terms.
template <class S>
BasicPoly<S> t_apply(const S& w, const BasicPoly<S>& p) {
  const auto pw = detail::powers_of(w, p.n);
  BasicPoly<S> r(p.n);
  for (int k = 0; k <= p.n; ++k) {
    r.c[k] += p.c[k];
    for (int h = 0; h < k; ++h)
      r.c[h] += p.c[k] * S(transport_coefficient(k, h)) * pw[k - h];
  }
  return r;
}

// Inverse of T_w by back-substitution from the top degree down; exact, no
// division (the unipotent part only ever lowers degree).
template <class S>
BasicPoly<S> t_inv_apply(const S& w, const BasicPoly<S>& p) {
  const auto pw = detail::powers_of(w, p.n);
  BasicPoly<S> q = p;
  for (int k = p.n; k >= 1; --k)
    for (int h = 0; h < k; ++h)
      q.c[h] -= q.c[k] * S(transport_coefficient(k, h)) * pw[k - h];
  return q;
}

// S_u: P(X) -> P(X + u), exact binomial expansion.
template <class S>
BasicPoly<S> s_apply(const S& u, const BasicPoly<S>& p) {
  const auto pw = detail::powers_of(u, p.n);
  BasicPoly<S> r(p.n);
  for (int k = 0; k <= p.n; ++k)
    for (int h = 0; h <= k; ++h)
      r.c[h] += p.c[k] * S(binomial(k, h)) * pw[k - h];
  return r;
}

}  // namespace polyweyl
