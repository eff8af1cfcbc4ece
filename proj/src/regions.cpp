#include "polyweyl/regions.hpp"

#include <algorithm>

namespace polyweyl {

Region Region::from_intervals(std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  Region r;
  for (const Interval& iv : intervals) {
    if (!r.parts_.empty() && iv.lo <= r.parts_.back().hi) {
      if (iv.hi > r.parts_.back().hi) r.parts_.back().hi = iv.hi;
    } else {
      r.parts_.push_back(iv);
    }
  }
  return r;
}

Rational Region::length() const {
  Rational total = 0;
  for (const Interval& iv : parts_) total += iv.length();
  return total;
}

const Rational& Region::min_lo() const {
  if (empty()) throw DomainError("min_lo of empty region");
  return parts_.front().lo;
}

Region Region::unioned(const Region& other) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return from_intervals(std::move(all));
}

Region Region::intersect(const Region& other) const {
  Region r;
  std::size_t i = 0, j = 0;
  while (i < parts_.size() && j < other.parts_.size()) {
    const Interval& a = parts_[i];
    const Interval& b = other.parts_[j];
    const Rational lo = std::max(a.lo, b.lo);
    const Rational hi = std::min(a.hi, b.hi);
    if (lo < hi) r.parts_.emplace_back(lo, hi);
    if (a.hi <= b.hi) ++i; else ++j;
  }
  return r;
}

Region Region::subtract(const Region& other) const {
  Region r;
  for (const Interval& a : parts_) {
    Rational cursor = a.lo;
    for (const Interval& b : other.parts_) {
      if (b.hi <= cursor) continue;
      if (b.lo >= a.hi) break;
      if (b.lo > cursor) r.parts_.emplace_back(cursor, b.lo);
      cursor = std::max(cursor, b.hi);
      if (!(cursor < a.hi)) break;
    }
    if (cursor < a.hi) r.parts_.emplace_back(cursor, a.hi);
  }
  return r;
}

Partition Partition::build(Region of, std::vector<Region> cells) {
  Partition p;
  p.of_ = std::move(of);
  for (const Region& c : cells)
    if (c.empty()) throw DomainError("partition cell must be nonempty");
  std::sort(cells.begin(), cells.end(),
            [](const Region& a, const Region& b) { return a.min_lo() < b.min_lo(); });
  Region seen;
  for (const Region& c : cells) {
    if (!seen.disjoint_from(c)) throw DomainError("partition cells overlap");
    seen = seen.unioned(c);
  }
  if (seen != p.of_) throw DomainError("partition cells do not cover the region");
  p.cells_ = std::move(cells);
  return p;
}

bool is_refinement(const Partition& fine, const Partition& coarse) {
  if (fine.of() != coarse.of()) throw DomainError("refinement check on different regions");
  for (const Region& fc : fine.cells()) {
    bool placed = false;
    for (const Region& cc : coarse.cells()) {
      if (cc.contains(fc)) { placed = true; break; }
    }
    if (!placed) return false;
  }
  return true;
}

Partition common_refinement(const Partition& a, const Partition& b) {
  if (a.of() != b.of()) throw DomainError("common refinement on different regions");
  std::vector<Region> cells;
  for (const Region& ca : a.cells())
    for (const Region& cb : b.cells()) {
      Region meet = ca.intersect(cb);
      if (!meet.empty()) cells.push_back(std::move(meet));
    }
  return Partition::build(a.of(), std::move(cells));
}

Partition merge_partitions(const Partition& pi, const Partition& pj) {
  if (!pi.of().disjoint_from(pj.of()))
    throw DomainError("merge_partitions requires disjoint regions");
  std::vector<Region> cells = pi.cells();
  cells.insert(cells.end(), pj.cells().begin(), pj.cells().end());
  return Partition::build(pi.of().unioned(pj.of()), std::move(cells));
}

std::pair<Partition, Partition> split_partition(const Partition& p, const Region& i,
                                                const Region& j) {
  if (!i.disjoint_from(j)) throw DomainError("split regions overlap");
  if (i.unioned(j) != p.of()) throw DomainError("split regions do not cover the partition");
  std::vector<Region> ci, cj;
  for (const Region& c : p.cells()) {
    if (i.contains(c)) ci.push_back(c);
    else if (j.contains(c)) cj.push_back(c);
    else throw DomainError("partition cell straddles the split");
  }
  return {Partition::build(i, std::move(ci)), Partition::build(j, std::move(cj))};
}

}  // namespace polyweyl
