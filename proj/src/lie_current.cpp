#include "polyweyl/lie_current.hpp"

namespace polyweyl {

CurrentElement CurrentElement::generator(int n, int k, const StepFunction& f) {
  CurrentElement x(n);
  if (k < 0 || k > n + 1) throw DomainError("generator index out of range");
  if (k == 0)
    x.l0_ = f.integral();
  else
    x.f_[k - 1] = f;
  return x;
}

CurrentElement CurrentElement::localized(int n, const Interval& i, const Rational& u,
                                         const Poly& p) {
  if (p.n != n) throw DomainError("localized element: polynomial degree bound mismatch");
  CurrentElement x(n);
  x.l0_ = p.c[0] * i.length();
  const StepFunction chi = StepFunction::indicator(Region(i));
  for (int k = 1; k <= n; ++k) x.f_[k - 1] = chi.scaled(p.c[k]);
  x.f_[n] = chi.scaled(u);
  return x;
}

CurrentElement CurrentElement::scaled(const Rational& s) const {
  CurrentElement r(n_);
  r.l0_ = l0_ * s;
  for (int k = 0; k <= n_; ++k) r.f_[k] = f_[k].scaled(s);
  return r;
}

CurrentElement operator+(const CurrentElement& x, const CurrentElement& y) {
  if (x.n_ != y.n_) throw DomainError("current sum: degree bounds differ");
  CurrentElement r(x.n_);
  r.l0_ = x.l0_ + y.l0_;
  for (int k = 0; k <= x.n_; ++k) r.f_[k] = x.f_[k] + y.f_[k];
  return r;
}

CurrentElement operator-(const CurrentElement& x, const CurrentElement& y) {
  return x + y.scaled(Rational(-1));
}

bool CurrentElement::is_zero() const {
  if (!l0_.is_zero()) return false;
  for (const StepFunction& f : f_)
    if (!f.is_zero()) return false;
  return true;
}

CurrentElement current_bracket(const CurrentElement& x, const CurrentElement& y) {
  if (x.n() != y.n()) throw DomainError("current bracket: degree bounds differ");
  const int n = x.n();
  CurrentElement r(n);
  const StepFunction& fx = x.f(n + 1);
  const StepFunction& fy = y.f(n + 1);
  for (int k = 1; k <= n; ++k) {
    const StepFunction h = (fx * y.f(k) - fy * x.f(k)).scaled(Rational(k));
    if (k == 1)
      r = r + CurrentElement::generator(n, 0, h);
    else
      r = r + CurrentElement::generator(n, k - 1, h);
  }
  return r;
}

CurrentElement jacobi_defect(const CurrentElement& x, const CurrentElement& y,
                             const CurrentElement& z) {
  return current_bracket(current_bracket(x, y), z) +
         current_bracket(current_bracket(y, z), x) +
         current_bracket(current_bracket(z, x), y);
}

RescalingConstants rescaling_constants(int n, const Rational& length, const Rational& a_i) {
  if (n < 1) throw DomainError("degree bound must be >= 1");
  if (length <= 0) throw DomainError("rescaling length must be positive");
  if (a_i <= 0) throw DomainError("rescaling weight must be positive");
  RescalingConstants rc;
  rc.n = n;
  rc.length = length;
  rc.a_i = a_i;
  rc.t = length * a_i;
  rc.b = pow_half_int(rc.t, 1);
  rc.c.reserve(n);
  for (int k = 1; k <= n; ++k) rc.c.push_back(pow_half_int(rc.t, 2 - k));
  return rc;
}

ScalarLieElement shat_apply(const RescalingConstants& params, const CurrentElement& x) {
  if (x.n() != params.n) throw DomainError("rescaling: degree bounds differ");
  const int n = x.n();

  // The element must look like localized(n, I, u, P) for a single interval I
  // of the parametrized length: every nonzero component a constant multiple
  // of the same indicator.
  std::optional<Interval> interval;
  for (int k = 1; k <= n + 1; ++k) {
    const StepFunction& f = x.f(k);
    if (f.is_zero()) continue;
    if (f.pieces().size() != 1)
      throw DomainError("rescaling: component is not a single-interval indicator multiple");
    const Interval& iv = f.pieces()[0].iv;
    if (interval && !(*interval == iv))
      throw DomainError("rescaling: components are supported on different intervals");
    interval = iv;
  }
  if (interval && interval->length() != params.length)
    throw DomainError("rescaling: interval length does not match the constants");

  ScalarLieElement r(n, Scalar(0), std::vector<Scalar>(n + 1, Scalar(0)));
  r.a[0] = Scalar(x.l0() * params.a_i);
  if (!interval) return r;

  for (int k = 1; k <= n; ++k) {
    const auto coeff = x.f(k).as_multiple_of_indicator(*interval);
    if (!coeff) throw DomainError("rescaling: component is not an indicator multiple");
    r.a[k] = params.c[k - 1] * Scalar(*coeff);
  }
  const auto top = x.f(n + 1).as_multiple_of_indicator(*interval);
  if (!top) throw DomainError("rescaling: component is not an indicator multiple");
  r.u = params.b * Scalar(*top);
  return r;
}

}  // namespace polyweyl
