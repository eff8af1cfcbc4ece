#pragma once

#include <cmath>
#include <complex>
#include <variant>

#include "polyweyl/rational.hpp"

namespace polyweyl {

using Complex = std::complex<double>;

// Exact-or-float scalar. Values stay exact rationals until an operation with
// no exact answer (an irrational square root) forces a double; from then on
// the float contaminates everything it touches. This realizes the dual
// numeric tower: group-law arithmetic is root-free and stays exact, while
// rescalings by non-square lengths drop to double precision.
class Scalar {
public:
  Scalar() : v_(Rational(0)) {}
  Scalar(const Rational& r) : v_(r) {}  // NOLINT: implicit by design
  Scalar(int v) : v_(Rational(v)) {}  // NOLINT: implicit by design
  Scalar(long long v) : v_(Rational(v)) {}  // NOLINT: implicit by design
  explicit Scalar(double d) : v_(d) {}

  bool is_exact() const { return std::holds_alternative<Rational>(v_); }

  const Rational& exact_value() const {
    if (!is_exact()) throw DomainError("scalar is not exact");
    return std::get<Rational>(v_);
  }

  double to_double() const {
    return is_exact() ? std::get<Rational>(v_).to_double() : std::get<double>(v_);
  }

  bool is_zero() const {
    return is_exact() ? std::get<Rational>(v_).is_zero() : std::get<double>(v_) == 0.0;
  }

  Scalar operator-() const {
    return is_exact() ? Scalar(-std::get<Rational>(v_)) : Scalar(-std::get<double>(v_));
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return Scalar(a.exact_value() + b.exact_value());
    return Scalar(a.to_double() + b.to_double());
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return Scalar(a.exact_value() - b.exact_value());
    return Scalar(a.to_double() - b.to_double());
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return Scalar(a.exact_value() * b.exact_value());
    return Scalar(a.to_double() * b.to_double());
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return Scalar(a.exact_value() / b.exact_value());
    const double d = b.to_double();
    if (d == 0.0) throw DomainError("scalar division by zero");
    return Scalar(a.to_double() / d);
  }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  // Exact scalars compare exactly; once a float is involved the comparison is
  // on double values (used only where tests have arranged exactness).
  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return a.exact_value() == b.exact_value();
    return a.to_double() == b.to_double();
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
  std::variant<Rational, double> v_;
};

// |a-b| <= tol * max(1, |a|, |b|): absolute for small values, relative for large.
inline bool approx_equal(double a, double b, double tol) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}
inline bool approx_equal(const Scalar& a, const Scalar& b, double tol) {
  if (a.is_exact() && b.is_exact()) return a == b;
  return approx_equal(a.to_double(), b.to_double(), tol);
}

// base^(k/2) for base > 0: exact when k is even or base is a perfect rational
// square, double otherwise.
inline Scalar pow_half_int(const Rational& base, long k) {
  if (base <= 0) throw DomainError("pow_half_int requires a positive base");
  if (k % 2 == 0) return Scalar(pow_int(base, k / 2));
  if (auto root = rat_sqrt_exact(base)) return Scalar(pow_int(*root, k));
  return Scalar(std::pow(base.to_double(), static_cast<double>(k) / 2.0));
}

// Principal branch: non-negative real part, cut along the negative real axis.
inline Complex complex_principal_sqrt(const Complex& z) { return std::sqrt(z); }

}  // namespace polyweyl
