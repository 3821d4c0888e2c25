#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ftd/atlas.h"
#include "ftd/suzuki.h"

namespace {

using ftd::Family;
using ftd::Point;
using ftd::SuzukiTuple;

const ftd::SuzukiContext& ctx8() {
  static const auto ctx = ftd::make_suzuki_context(8);
  return ctx;
}

TEST(Suzuki, FieldChoice) {
  EXPECT_EQ(ftd::suzuki_field(8)->order(), 8u);
  EXPECT_EQ(ftd::suzuki_field(32)->order(), 32u);
  EXPECT_THROW(ftd::suzuki_field(2), ftd::SuzukiError);
  EXPECT_THROW(ftd::suzuki_field(16), ftd::SuzukiError);
  EXPECT_THROW(ftd::suzuki_field(12), ftd::SuzukiError);
}

// The ovoid is the Sz-orbit of e1, built independently by orbit closure.
TEST(Ovoid, IsTheOrbitOfE1) {
  const auto& c = ctx8();
  EXPECT_EQ(c.ovoid.size(), 65u * 7u);
  const ftd::PointAction act(c.sz);
  auto orbit = ftd::point_orbit(act, ftd::point_of(c.field, 1, 0, 0, 0)).elements;
  std::sort(orbit.begin(), orbit.end());
  EXPECT_EQ(orbit, c.ovoid);
}

// Distinct projective points of an ovoid of W(q) are never perpendicular.
TEST(Ovoid, PairwiseNonPerpendicular) {
  const auto& c = ctx8();
  ASSERT_TRUE(c.sz.form);
  std::vector<ftd::Vector> reps;
  std::set<Point> seen;
  for (Point x : c.ovoid) {
    if (seen.count(x)) continue;
    const auto v = ftd::Vector::from_point(c.field, 4, x);
    for (ftd::Elem m = 1; m < 8; ++m) seen.insert(v.scaled(m).to_point());
    reps.push_back(v);
  }
  ASSERT_EQ(reps.size(), 65u);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      EXPECT_NE(ftd::evaluate_form(*c.sz.form, reps[i], reps[j]), 0u);
    }
  }
}

TEST(Spread, PartitionsTheNonzeroVectorsAndIsInvariant) {
  const auto& c = ctx8();
  ASSERT_EQ(c.spread.size(), 65u);
  EXPECT_TRUE(ftd::is_spread(c.spread, c.space));
  const std::set<ftd::Subspace> comps(c.spread.begin(), c.spread.end());
  const ftd::PointAction act(c.sz);
  for (const auto& s : c.spread) {
    EXPECT_EQ(s.size(), 64u);
    for (std::size_t g = 0; g < act.num_gens(); ++g) EXPECT_TRUE(comps.count(act.subspace_image(s, g)));
  }
  // Dropping one component leaves vectors uncovered.
  std::vector<ftd::Subspace> partial(c.spread.begin() + 1, c.spread.end());
  EXPECT_FALSE(ftd::is_spread(partial, c.space));
}

TEST(Family, ClassificationExamples) {
  auto f = ftd::suzuki_field(8);
  const ftd::Elem w = f->primitive();
  EXPECT_EQ(ftd::classify_family(8, {1, 0, 1, 0}), Family::kFamily1);
  EXPECT_EQ(ftd::classify_family(8, {0, 1, 0, 1}), Family::kFamily1);
  EXPECT_EQ(ftd::classify_family(8, {1, 1, 1, 1}), Family::kFamily2);
  EXPECT_EQ(ftd::classify_family(8, {1, 1, w, f->mul(f->suzuki_sigma(w), w)}), Family::kFamily3);
  EXPECT_EQ(ftd::classify_family(8, {0, 0, 1, 1}), Family::kNotABlock);
  EXPECT_EQ(ftd::classify_family(8, {1, 0, 0, 1}), Family::kNotABlock);
  EXPECT_EQ(ftd::to_string(Family::kFamily4), "Family4");
}

TEST(Family, Family1BlockIsTheCoordinatePlane) {
  const auto b = ftd::family_block(8, {1, 0, 1, 0});
  auto f = ftd::suzuki_field(8);
  const std::vector<ftd::Vector> gens{ftd::Vector(f, {1, 0, 0, 0}), ftd::Vector(f, {0, 0, 1, 0})};
  EXPECT_EQ(b, ftd::canonical_subspace(gens, 3));
  EXPECT_EQ(ftd::family_block_literal(8, {1, 0, 1, 0}), b.elements());
  EXPECT_THROW(ftd::family_block(8, {0, 0, 1, 1}), ftd::SuzukiError);
}

TEST(Family, Family1IsTangentAndNotInSpread) {
  const auto& c = ctx8();
  const auto rep = ftd::tangency_check(ftd::family_block(8, {1, 0, 1, 0}), c);
  EXPECT_EQ(rep.verdict, ftd::Tangency::kTangentNotInSpread);
  EXPECT_EQ(rep.meet, 7u);
  EXPECT_TRUE(rep.one_point);
  EXPECT_FALSE(rep.in_spread);
  // A spread component meets the ovoid in one projective point too, but is in the spread.
  const auto srep = ftd::tangency_check(c.spread.front(), c);
  EXPECT_TRUE(srep.in_spread);
  EXPECT_EQ(srep.verdict, ftd::Tangency::kOther);
}

// Frozen: 294 Family 4 tuples with x0 = 1 at q = 8.
TEST(Family4, SearchCountAndMeet) {
  const auto& c = ctx8();
  const auto ws = ftd::family4_search(8, 2);
  EXPECT_EQ(ws.size(), 294u);
  EXPECT_TRUE(std::is_sorted(ws.begin(), ws.end()));
  EXPECT_EQ(ftd::family4_search(8, 1), ws);
  for (const auto& t : ws) {
    EXPECT_EQ(t.x0, 1u);
    EXPECT_FALSE(ftd::intorb_condition1(c.field, t));
    EXPECT_EQ(ftd::zeta_fixed_points(8, t), 1);
    const auto b = ftd::family_block(8, t);
    EXPECT_EQ(b.size(), 64u);
    EXPECT_EQ(ftd::ovoid_meet(b, c), 7u);
  }
}

// Independent count of zeta fixed points by direct evaluation.
TEST(Family4, ZetaFixedPointsAgreeWithDirectCount) {
  auto f = ftd::suzuki_field(8);
  const auto& k = *f;
  const std::int64_t s = 4;
  int checked = 0;
  for (ftd::Elem y = 1; y < 8; ++y) {
    for (ftd::Elem z = 1; z < 8; ++z) {
      for (ftd::Elem t = 1; t < 8; ++t) {
        const SuzukiTuple tup{1, y, z, t};
        if (ftd::intorb_condition1(f, tup)) continue;
        // zeta(x) = (a^s x^s + b^(s+2)) / (c x^s + a b) with a = y/t, b = z/t, c = 1/t.
        const ftd::Elem a = k.div(y, t), b = k.div(z, t), c = k.inv(t);
        int fixed = 0;
        for (ftd::Elem x = 1; x < 8; ++x) {
          const ftd::Elem xs = k.pow(x, s);
          const ftd::Elem den = k.add(k.mul(c, xs), k.mul(a, b));
          if (den && k.mul(x, den) == k.add(k.mul(k.pow(a, s), xs), k.pow(b, s + 2))) ++fixed;
        }
        EXPECT_EQ(ftd::zeta_fixed_points(8, tup), fixed);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Family, Family2BlockIsNotFieldLinear) {
  const auto& c = ctx8();
  const auto b = ftd::family_block(8, {1, 1, 1, 1});
  const ftd::Elem w = c.field->primitive();
  bool closed = true;
  for (Point x : b.basis()) closed = closed && b.contains(ftd::Vector::from_point(c.field, 4, x).scaled(w).to_point());
  EXPECT_FALSE(closed);
  EXPECT_THROW(ftd::tangency_check(b, c), ftd::SuzukiError);
}

TEST(Family, BlocksOfEveryFamilyHaveSizeQSquared) {
  auto f = ftd::suzuki_field(8);
  const ftd::Elem w = f->primitive();
  for (const SuzukiTuple& t : {SuzukiTuple{1, 0, 1, 0}, SuzukiTuple{1, 1, 1, 1},
                               SuzukiTuple{1, 1, w, f->mul(f->suzuki_sigma(w), w)}}) {
    EXPECT_EQ(ftd::family_block(8, t).size(), 64u);
  }
}

}  // namespace
