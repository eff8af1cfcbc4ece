#include "doctest.h"
#include "polyweyl/regions.hpp"

#include "../support/gen.hpp"

using namespace polyweyl;

namespace {
Interval iv(long long lo, long long hi) { return Interval(Rational(lo), Rational(hi)); }
Interval ivq(const Rational& lo, const Rational& hi) { return Interval(lo, hi); }
}  // namespace

TEST_SUITE("regions") {

TEST_CASE("interval basics") {
  CHECK(iv(0, 1).length() == Rational(1));
  CHECK_THROWS_AS(Interval(Rational(1), Rational(1)), DomainError);
  CHECK_THROWS_AS(Interval(Rational(2), Rational(1)), DomainError);
}

TEST_CASE("region canonical form") {
  // Touching and overlapping intervals merge; order does not matter.
  const Region r = Region::from_intervals({iv(1, 2), iv(0, 1), iv(4, 5)});
  REQUIRE(r.parts().size() == 2);
  CHECK(r.parts()[0] == iv(0, 2));
  CHECK(r.parts()[1] == iv(4, 5));
  CHECK(r.length() == Rational(3));
  CHECK(r.min_lo() == Rational(0));
  CHECK(Region::from_intervals({iv(0, 3), iv(1, 2)}) == Region(iv(0, 3)));
  CHECK(Region().empty());
  CHECK(Region().length() == Rational(0));
}

TEST_CASE("region set operations") {
  const Region a = Region::from_intervals({iv(0, 2), iv(3, 5)});
  const Region b = Region::from_intervals({iv(1, 4)});
  CHECK(a.intersect(b) == Region::from_intervals({iv(1, 2), iv(3, 4)}));
  CHECK(a.unioned(b) == Region(iv(0, 5)));
  CHECK(a.subtract(b) == Region::from_intervals({iv(0, 1), iv(4, 5)}));
  CHECK(b.subtract(a) == Region(iv(2, 3)));
  CHECK(a.contains(Region(iv(3, 4))));
  CHECK(!a.contains(b));
  CHECK(a.disjoint_from(Region(iv(2, 3))));
  CHECK(!a.disjoint_from(b));

  gen::Rng rng(73);
  for (int i = 0; i < 200; ++i) {
    const Region x = Region::from_intervals({gen::interval(rng), gen::interval(rng)});
    const Region y = Region::from_intervals({gen::interval(rng)});
    CHECK(x.subtract(y).unioned(x.intersect(y)) == x);
    CHECK(x.intersect(y) == y.intersect(x));
    CHECK(x.subtract(y).disjoint_from(y));
    CHECK(x.unioned(y).contains(x));
  }
}

TEST_CASE("partition construction") {
  const Region whole(iv(0, 2));
  const Partition p = Partition::build(whole, {Region(iv(1, 2)), Region(iv(0, 1))});
  CHECK(p.size() == 2);
  // Cells are sorted by leftmost point.
  CHECK(p.cells()[0] == Region(iv(0, 1)));
  CHECK(Partition::trivial(whole).size() == 1);
  CHECK_THROWS_AS(Partition::build(whole, {Region(iv(0, 1))}), DomainError);
  CHECK_THROWS_AS(Partition::build(whole, {Region(iv(0, 2)), Region(iv(1, 2))}), DomainError);
  CHECK_THROWS_AS(Partition::build(whole, {Region(iv(0, 2)), Region()}), DomainError);
}

TEST_CASE("refinement order") {
  const Region whole(iv(0, 2));
  const Partition coarse = Partition::trivial(whole);
  const Partition halves = Partition::build(whole, {Region(iv(0, 1)), Region(iv(1, 2))});
  const Partition thirds = Partition::build(
      whole, {Region(ivq(0, Rational(3, 2))), Region(ivq(Rational(3, 2), 2))});
  CHECK(is_refinement(halves, coarse));
  CHECK(is_refinement(halves, halves));
  CHECK(!is_refinement(coarse, halves));
  CHECK(!is_refinement(thirds, halves));
  CHECK_THROWS_AS(is_refinement(halves, Partition::trivial(Region(iv(0, 3)))), DomainError);

  gen::Rng rng(79);
  for (int i = 0; i < 100; ++i) {
    const Partition fine = gen::interval_partition(rng, gen::interval(rng), 6);
    const Partition mid = gen::coarsen(rng, fine);
    const Partition top = gen::coarsen(rng, mid);
    CHECK(is_refinement(fine, mid));
    CHECK(is_refinement(mid, top));
    CHECK(is_refinement(fine, top));  // transitivity
    // Antisymmetry on canonical forms.
    if (is_refinement(mid, fine)) CHECK(mid == fine);
  }
}

TEST_CASE("common refinement") {
  const Region whole(iv(0, 2));
  const Partition halves = Partition::build(whole, {Region(iv(0, 1)), Region(iv(1, 2))});
  const Partition skew = Partition::build(
      whole, {Region(ivq(0, Rational(3, 2))), Region(ivq(Rational(3, 2), 2))});
  const Partition meet = common_refinement(halves, skew);
  CHECK(meet.size() == 3);
  CHECK(meet.cells()[1] == Region(ivq(1, Rational(3, 2))));
  CHECK(common_refinement(halves, halves) == halves);
  CHECK(common_refinement(Partition::trivial(whole), halves) == halves);

  gen::Rng rng(83);
  for (int i = 0; i < 100; ++i) {
    const Interval base = gen::interval(rng);
    const Partition p1 = gen::interval_partition(rng, base, 5);
    const Partition p2 = gen::interval_partition(rng, base, 5);
    const Partition m = common_refinement(p1, p2);
    CHECK(is_refinement(m, p1));
    CHECK(is_refinement(m, p2));
    // Universal property: everything refining both refines the meet.
    const Partition finer = common_refinement(m, gen::interval_partition(rng, base, 5));
    CHECK(is_refinement(finer, m));
  }
}

TEST_CASE("merge and split") {
  const Partition pi = Partition::build(Region(iv(0, 2)),
                                        {Region(iv(0, 1)), Region(iv(1, 2))});
  const Partition pj = Partition::trivial(Region(iv(3, 4)));
  const Partition merged = merge_partitions(pi, pj);
  CHECK(merged.of() == Region::from_intervals({iv(0, 2), iv(3, 4)}));
  CHECK(merged.size() == 3);
  const auto [back_i, back_j] = split_partition(merged, Region(iv(0, 2)), Region(iv(3, 4)));
  CHECK(back_i == pi);
  CHECK(back_j == pj);
  CHECK_THROWS_AS(merge_partitions(pi, Partition::trivial(Region(iv(1, 3)))), DomainError);

  // Refinement is monotone under merging.
  gen::Rng rng(89);
  for (int i = 0; i < 60; ++i) {
    const Interval a = gen::interval(rng);
    const Interval b(a.hi + Rational(1, 16), a.hi + Rational(1, 2));
    const Partition fine_a = gen::interval_partition(rng, a, 4);
    const Partition fine_b = gen::interval_partition(rng, b, 4);
    const Partition coarse_a = gen::coarsen(rng, fine_a);
    const Partition coarse_b = gen::coarsen(rng, fine_b);
    CHECK(is_refinement(merge_partitions(fine_a, fine_b),
                        merge_partitions(coarse_a, coarse_b)));
  }
}

}  // TEST_SUITE
