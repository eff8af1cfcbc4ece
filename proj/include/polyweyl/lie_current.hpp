#pragma once

#include <vector>

#include "polyweyl/heis.hpp"
#include "polyweyl/step_function.hpp"

namespace polyweyl {

// One-mode Lie algebra element: u on the raising generator (index n+1) and
// a[k] on the grading generators, k = 0..n. Bracket relations: generators of
// index <= n commute; [top, k-th] = k * (k-1)-th, with the (-1)-st read as 0.
template <class S>
struct BasicLieElement {
  int n = 1;
  S u = S(0);
  std::vector<S> a;

  BasicLieElement() : a(2, S(0)) {}
  BasicLieElement(int bound, S top, std::vector<S> coeffs)
      : n(bound), u(std::move(top)), a(std::move(coeffs)) {
    if (n < 1) throw DomainError("degree bound must be >= 1");
    if (static_cast<int>(a.size()) != n + 1)
      throw DomainError("lie element must carry exactly n+1 coefficients");
  }

  friend bool operator==(const BasicLieElement& x, const BasicLieElement& y) {
    return x.n == y.n && x.u == y.u && x.a == y.a;
  }
  friend bool operator!=(const BasicLieElement& x, const BasicLieElement& y) {
    return !(x == y);
  }
};

using LieElement = BasicLieElement<Rational>;
using ScalarLieElement = BasicLieElement<Scalar>;

template <class S>
BasicLieElement<S> lie_bracket(const BasicLieElement<S>& x, const BasicLieElement<S>& y) {
  if (x.n != y.n) throw DomainError("lie bracket: degree bounds differ");
  BasicLieElement<S> r(x.n, S(0), std::vector<S>(x.n + 1, S(0)));
  for (int k = 1; k <= x.n; ++k)
    r.a[k - 1] = (x.u * y.a[k] - y.u * x.a[k]) * S(Rational(k));
  return r;
}

template <class S>
bool is_zero(const BasicLieElement<S>& x) {
  if (!x.u.is_zero()) return false;
  for (const S& v : x.a)
    if (!v.is_zero()) return false;
  return true;
}

// Current-algebra element: step functions smear each generator. The scalar
// generator's test function enters only through its integral, so that part is
// stored directly as the integral l0 (the canonical quotient); f(k) is the
// smearing of the k-th generator for k = 1..n+1, with k = n+1 the top one.
class CurrentElement {
public:
  explicit CurrentElement(int n)
      : n_(n), l0_(0), f_(n + 1) {
    if (n < 1) throw DomainError("degree bound must be >= 1");
  }
  CurrentElement(int n, Rational l0, std::vector<StepFunction> f)
      : n_(n), l0_(std::move(l0)), f_(std::move(f)) {
    if (n < 1) throw DomainError("degree bound must be >= 1");
    if (static_cast<int>(f_.size()) != n + 1)
      throw DomainError("current element must carry n+1 step functions");
  }

  static CurrentElement zero(int n) { return CurrentElement(n); }
  // Single smeared generator: k in 0..n+1; k = 0 keeps only the integral.
  static CurrentElement generator(int n, int k, const StepFunction& f);
  // The localized group parametrization: u on the top generator and a_j on
  // the j-th, all smeared by the indicator of I.
  static CurrentElement localized(int n, const Interval& i, const Rational& u, const Poly& p);

  int n() const { return n_; }
  const Rational& l0() const { return l0_; }
  // k in 1..n+1.
  const StepFunction& f(int k) const {
    if (k < 1 || k > n_ + 1) throw DomainError("current component index out of range");
    return f_[k - 1];
  }

  CurrentElement scaled(const Rational& s) const;
  friend CurrentElement operator+(const CurrentElement& x, const CurrentElement& y);
  friend CurrentElement operator-(const CurrentElement& x, const CurrentElement& y);
  bool is_zero() const;

  friend bool operator==(const CurrentElement& x, const CurrentElement& y) {
    return x.n_ == y.n_ && x.l0_ == y.l0_ && x.f_ == y.f_;
  }
  friend bool operator!=(const CurrentElement& x, const CurrentElement& y) { return !(x == y); }

private:
  int n_;
  Rational l0_;
  std::vector<StepFunction> f_;  // f_[k-1] smears the k-th generator
};

// Bilinear bracket: [top(f), k-th(g)] = k * (k-1)-th(fg); everything else
// commutes. The k = 1 term lands on the scalar generator via the integral.
CurrentElement current_bracket(const CurrentElement& x, const CurrentElement& y);

// [[x,y],z] + [[y,z],x] + [[z,x],y]; identically zero when the bracket is
// consistent.
CurrentElement jacobi_defect(const CurrentElement& x, const CurrentElement& y,
                             const CurrentElement& z);

// Constants of the interval rescaling isomorphism in the convention c_1 = b:
// with t = |I| a_I, b = t^{1/2} and c_k = t^{1 - k/2}; then c_k = b^{-k} t
// for every k, which is the structure condition for bracket preservation.
struct RescalingConstants {
  int n;
  Rational length;
  Rational a_i;
  Rational t;  // |I| * a_I
  Scalar b;
  std::vector<Scalar> c;  // c[k-1] is the k-th constant, k = 1..n
};

RescalingConstants rescaling_constants(int n, const Rational& length, const Rational& a_i);

// Coordinate action of the rescaling isomorphism on an element of the shape
// localized(n, I, u, P) with |I| = params.length: the result is the one-mode
// element with coordinates rescaled exactly like the group rescaling of
// (u, P) by the effective length t, except that the scalar coordinate picks
// up the factor a_I through the integral.
ScalarLieElement shat_apply(const RescalingConstants& params, const CurrentElement& x);

}  // namespace polyweyl
