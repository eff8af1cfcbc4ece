#pragma once

#include <optional>
#include <vector>

#include "polyweyl/regions.hpp"

namespace polyweyl {

// Piecewise-constant function with rational values and rational-endpoint
// half-open pieces; identically zero outside the listed pieces. Canonical
// form: pieces sorted, disjoint, values nonzero, adjacent equal-value pieces
// merged — so equality of functions is structural equality.
class StepFunction {
public:
  struct Piece {
    Interval iv;
    Rational val;
    friend bool operator==(const Piece& a, const Piece& b) {
      return a.iv == b.iv && a.val == b.val;
    }
  };

  StepFunction() = default;  // the zero function

  // Pieces may touch but not overlap; overlapping input is rejected.
  static StepFunction from_pieces(std::vector<Piece> pieces);
  static StepFunction indicator(const Region& support, const Rational& value = Rational(1));

  const std::vector<Piece>& pieces() const { return pieces_; }
  bool is_zero() const { return pieces_.empty(); }
  Region support() const;

  Rational value_at(const Rational& x) const;
  Rational integral() const;
  Rational integral_over(const Region& r) const;

  StepFunction scaled(const Rational& s) const;
  StepFunction operator-() const { return scaled(Rational(-1)); }
  friend StepFunction operator+(const StepFunction& f, const StepFunction& g);
  friend StepFunction operator-(const StepFunction& f, const StepFunction& g) {
    return f + (-g);
  }
  // Pointwise product.
  friend StepFunction operator*(const StepFunction& f, const StepFunction& g);

  // If f = c * indicator(I) for the given interval (c possibly 0), returns c.
  std::optional<Rational> as_multiple_of_indicator(const Interval& i) const;

  friend bool operator==(const StepFunction& a, const StepFunction& b) {
    return a.pieces_ == b.pieces_;
  }
  friend bool operator!=(const StepFunction& a, const StepFunction& b) { return !(a == b); }

private:
  std::vector<Piece> pieces_;
};

}  // namespace polyweyl
