#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <utility>

#include "polyweyl/errors.hpp"

namespace polyweyl {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Arbitrary-precision rational in canonical form (denominator > 0, reduced).
// Canonicality is maintained by the backing cpp_rational.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long long value) : v_(value) {}  // NOLINT: implicit by design
  explicit Rational(BigRat value) : v_(std::move(value)) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    // The backing type insists on a pre-canonicalized pair: positive
    // denominator, lowest terms.
    BigInt n = num, d = den;
    if (d < 0) { n = -n; d = -d; }
    const BigInt g = boost::multiprecision::gcd(n < 0 ? BigInt(-n) : n, d);
    if (g > 1) { n /= g; d /= g; }
    v_ = BigRat(n, d);
  }

  static Rational parse(const std::string& text);

  BigInt num() const { return boost::multiprecision::numerator(v_); }
  BigInt den() const { return boost::multiprecision::denominator(v_); }
  const BigRat& raw() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }
  bool is_integer() const { return den() == 1; }

  double to_double() const { return v_.convert_to<double>(); }

  // Canonical "p/q" (or "p" for integers); parse() round-trips it.
  std::string str() const {
    const BigInt d = den();
    if (d == 1) return num().str();
    return num().str() + "/" + d.str();
  }

  Rational operator-() const { return Rational(BigRat(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.v_ == 0) throw DomainError("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
  BigRat v_;
};

inline Rational abs(const Rational& q) { return q < 0 ? -q : q; }

inline Rational Rational::parse(const std::string& text) {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string::npos) throw ParseError("empty rational literal");
  const std::string s = text.substr(begin, end - begin + 1);

  auto parse_int = [](const std::string& part, const char* role) -> BigInt {
    if (part.empty()) throw ParseError(std::string("missing ") + role + " in rational literal");
    std::size_t i = (part[0] == '+' || part[0] == '-') ? 1 : 0;
    if (i == part.size()) throw ParseError("sign without digits in rational literal");
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9')
        throw ParseError("invalid character '" + std::string(1, part[i]) + "' in rational literal");
    return BigInt(part);
  };

  const std::size_t slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigRat(parse_int(s, "numerator")));
  if (s.find('/', slash + 1) != std::string::npos)
    throw ParseError("multiple '/' in rational literal");
  const BigInt num = parse_int(s.substr(0, slash), "numerator");
  const BigInt den = parse_int(s.substr(slash + 1), "denominator");
  if (den == 0) throw ParseError("zero denominator in rational literal");
  return Rational(num, den);
}

// Exact integer power; negative exponents require a nonzero base.
inline Rational pow_int(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (base.is_zero() && exponent < 0) throw DomainError("zero base with negative exponent");
  const unsigned long k = exponent < 0 ? -(unsigned long)exponent : (unsigned long)exponent;
  BigInt pn = boost::multiprecision::pow(base.num(), (unsigned)k);
  BigInt pd = boost::multiprecision::pow(base.den(), (unsigned)k);
  return exponent > 0 ? Rational(pn, pd) : Rational(pd, pn);
}

inline std::optional<BigInt> int_sqrt_exact(const BigInt& v) {
  if (v < 0) return std::nullopt;
  BigInt r = boost::multiprecision::sqrt(v);
  if (r * r == v) return r;
  return std::nullopt;
}

// Exact square root when numerator and denominator are both perfect squares.
inline std::optional<Rational> rat_sqrt_exact(const Rational& q) {
  if (q < 0) throw DomainError("square root of negative rational");
  auto rn = int_sqrt_exact(q.num());
  if (!rn) return std::nullopt;
  auto rd = int_sqrt_exact(q.den());
  if (!rd) return std::nullopt;
  return Rational(*rn, *rd);
}

}  // namespace polyweyl
