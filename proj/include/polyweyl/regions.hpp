#pragma once

#include <utility>
#include <vector>

#include "polyweyl/rational.hpp"

namespace polyweyl {

// Half-open interval [lo, hi) with rational endpoints, lo < hi.
struct Interval {
  Rational lo, hi;

  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (!(lo < hi)) throw DomainError("interval requires lo < hi");
  }
  Rational length() const { return hi - lo; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
  friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }
};

// Finite union of half-open intervals in canonical form: sorted, pairwise
// disjoint, non-adjacent (maximal merged intervals). Equality is structural.
class Region {
public:
  Region() = default;
  explicit Region(const Interval& iv) : parts_{iv} {}
  static Region from_intervals(std::vector<Interval> intervals);

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool is_interval() const { return parts_.size() == 1; }
  Rational length() const;
  // Leftmost point; the sort key for partition cells.
  const Rational& min_lo() const;

  Region unioned(const Region& other) const;
  Region intersect(const Region& other) const;
  Region subtract(const Region& other) const;
  bool disjoint_from(const Region& other) const { return intersect(other).empty(); }
  bool contains(const Region& other) const { return other.subtract(*this).empty(); }

  friend bool operator==(const Region& a, const Region& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Region& a, const Region& b) { return !(a == b); }

private:
  std::vector<Interval> parts_;
};

// Finite partition of a region: pairwise disjoint nonempty cells (themselves
// regions) whose union is the whole. Cells are kept sorted by leftmost point,
// making the representation canonical.
class Partition {
public:
  static Partition build(Region of, std::vector<Region> cells);
  static Partition trivial(const Region& of) { return build(of, {of}); }

  const Region& of() const { return of_; }
  const std::vector<Region>& cells() const { return cells_; }
  int size() const { return static_cast<int>(cells_.size()); }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.of_ == b.of_ && a.cells_ == b.cells_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

private:
  Region of_;
  std::vector<Region> cells_;
};

// True iff every cell of `fine` is contained in exactly one cell of `coarse`
// (partitions of the same region; the coarse cells being disjoint makes the
// containing cell unique whenever it exists).
bool is_refinement(const Partition& fine, const Partition& coarse);

// Coarsest partition refining both: all nonempty pairwise cell intersections.
Partition common_refinement(const Partition& a, const Partition& b);

// Partition of the disjoint union carrying both cell lists side by side.
Partition merge_partitions(const Partition& pi, const Partition& pj);

// Inverse of merge_partitions: splits a partition of I u J back into the pair
// (cells inside I, cells inside J). Errors if some cell straddles.
std::pair<Partition, Partition> split_partition(const Partition& p, const Region& i,
                                                const Region& j);

}  // namespace polyweyl
