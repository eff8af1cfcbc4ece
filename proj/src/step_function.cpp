#include "polyweyl/step_function.hpp"

#include <algorithm>

namespace polyweyl {

namespace {

// Canonicalize a sorted, disjoint piece list: drop zeros, merge touching
// pieces of equal value.
std::vector<StepFunction::Piece> normalize(std::vector<StepFunction::Piece> in) {
  std::vector<StepFunction::Piece> out;
  for (StepFunction::Piece& p : in) {
    if (p.val.is_zero()) continue;
    if (!out.empty() && out.back().iv.hi == p.iv.lo && out.back().val == p.val)
      out.back().iv.hi = p.iv.hi;
    else
      out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

StepFunction StepFunction::from_pieces(std::vector<Piece> pieces) {
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    return a.iv.lo < b.iv.lo;
  });
  for (std::size_t i = 1; i < pieces.size(); ++i)
    if (pieces[i].iv.lo < pieces[i - 1].iv.hi)
      throw DomainError("step function pieces overlap");
  StepFunction f;
  f.pieces_ = normalize(std::move(pieces));
  return f;
}

StepFunction StepFunction::indicator(const Region& support, const Rational& value) {
  std::vector<Piece> pieces;
  for (const Interval& iv : support.parts()) pieces.push_back({iv, value});
  StepFunction f;
  f.pieces_ = normalize(std::move(pieces));
  return f;
}

Region StepFunction::support() const {
  std::vector<Interval> ivs;
  for (const Piece& p : pieces_) ivs.push_back(p.iv);
  return Region::from_intervals(std::move(ivs));
}

Rational StepFunction::value_at(const Rational& x) const {
  for (const Piece& p : pieces_)
    if (p.iv.lo <= x && x < p.iv.hi) return p.val;
  return 0;
}

Rational StepFunction::integral() const {
  Rational total = 0;
  for (const Piece& p : pieces_) total += p.val * p.iv.length();
  return total;
}

Rational StepFunction::integral_over(const Region& r) const {
  Rational total = 0;
  for (const Piece& p : pieces_) {
    const Region overlap = Region(p.iv).intersect(r);
    total += p.val * overlap.length();
  }
  return total;
}

StepFunction StepFunction::scaled(const Rational& s) const {
  std::vector<Piece> pieces;
  for (const Piece& p : pieces_) pieces.push_back({p.iv, p.val * s});
  StepFunction f;
  f.pieces_ = normalize(std::move(pieces));
  return f;
}

namespace {

// Merge-sweep over the union of breakpoints, combining values pointwise.
template <class Combine>
StepFunction pointwise(const StepFunction& f, const StepFunction& g, Combine combine) {
  std::vector<Rational> cuts;
  for (const StepFunction::Piece& p : f.pieces()) {
    cuts.push_back(p.iv.lo);
    cuts.push_back(p.iv.hi);
  }
  for (const StepFunction::Piece& p : g.pieces()) {
    cuts.push_back(p.iv.lo);
    cuts.push_back(p.iv.hi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<StepFunction::Piece> pieces;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Interval seg(cuts[i], cuts[i + 1]);
    Rational v = combine(f.value_at(seg.lo), g.value_at(seg.lo));
    if (!v.is_zero()) pieces.push_back({seg, std::move(v)});
  }
  return StepFunction::from_pieces(std::move(pieces));
}

}  // namespace

StepFunction operator+(const StepFunction& f, const StepFunction& g) {
  return pointwise(f, g, [](const Rational& a, const Rational& b) { return a + b; });
}

StepFunction operator*(const StepFunction& f, const StepFunction& g) {
  return pointwise(f, g, [](const Rational& a, const Rational& b) { return a * b; });
}

std::optional<Rational> StepFunction::as_multiple_of_indicator(const Interval& i) const {
  if (pieces_.empty()) return Rational(0);
  if (pieces_.size() == 1 && pieces_[0].iv == i) return pieces_[0].val;
  return std::nullopt;
}

}  // namespace polyweyl
