#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

#include "ftd/atlas.h"
#include "ftd/autsearch.h"
#include "ftd/design.h"

namespace {

using ftd::Block;
using ftd::Point;

// Counts GL_n(p) elements preserving the block set by choosing images of e_1, ..., e_n
// one at a time and rejecting as soon as a block inside the assigned span fails.
std::uint64_t brute_stabilizer_order(const std::vector<Block>& blocks0, std::uint32_t p, std::uint32_t n) {
  const ftd::PointSpace sp(p, n);
  const std::unordered_set<Block, ftd::BlockHash> set(blocks0.begin(), blocks0.end());
  std::vector<std::vector<const Block*>> by_level(n + 1);
  for (const auto& b : blocks0) {
    std::uint32_t lv = 0;
    while (lv < n && b.back() >= sp.unit(lv)) ++lv;
    by_level[lv].push_back(&b);
  }
  std::uint64_t count = 0;
  std::vector<Point> img(sp.size(), 0);
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t j) {
    if (j == n) {
      ++count;
      return;
    }
    const std::uint64_t span = sp.unit(j);
    std::vector<char> used(sp.size(), 0);
    for (std::uint64_t x = 0; x < span; ++x) used[img[x]] = 1;
    for (Point c = 1; c < sp.size(); ++c) {
      if (used[c]) continue;
      for (std::uint32_t a = 1; a < p; ++a) {
        for (std::uint64_t x = 0; x < span; ++x) img[x + a * span] = sp.add(img[x], sp.scale(c, a));
      }
      bool ok = true;
      for (const Block* b : by_level[j + 1]) {
        Block o;
        for (Point x : *b) o.push_back(img[x]);
        std::sort(o.begin(), o.end());
        if (!set.count(o)) {
          ok = false;
          break;
        }
      }
      if (ok) rec(j + 1);
    }
  };
  rec(0);
  return count;
}

ftd::Design ex3_design() {
  const auto h0 = ftd::atlas("Ex3-SL2(5)");
  const ftd::PointSpace sp(3, 4);
  const std::vector<Point> gens{sp.unit(0), sp.unit(3)};
  return ftd::build_design(ftd::Subspace::span_points(sp, gens).elements(), ftd::affine_closure(h0));
}

ftd::Design ex4_q4_design() {
  const auto g = ftd::affine_closure(ftd::atlas("SL2", {.q = 4}));
  const ftd::PointSpace sp(2, 4);
  const std::vector<Point> gens{sp.unit(0), sp.unit(2)};
  return ftd::build_design(ftd::Subspace::span_points(sp, gens).elements(), g);
}

std::vector<Block> all_subspaces(std::uint32_t p, std::uint32_t n, std::uint32_t d) {
  const ftd::PointSpace sp(p, n);
  std::set<Block> out;
  std::vector<Point> pick(d);
  std::function<void(std::uint32_t, Point)> rec = [&](std::uint32_t i, Point from) {
    if (i == d) {
      const auto s = ftd::Subspace::span_points(sp, pick);
      if (s.dim() == d) out.insert(s.elements());
      return;
    }
    for (Point x = from; x < sp.size(); ++x) {
      pick[i] = x;
      rec(i + 1, x + 1);
    }
  };
  rec(0, 1);
  return {out.begin(), out.end()};
}

TEST(AutSearch, Ex4OverGF4MatchesBruteForce) {
  const auto d = ex4_q4_design();
  const auto st = ftd::linear_blockset_stabilizer(d.blocks0, 2, 4);
  EXPECT_EQ(st.order, 120u);
  EXPECT_EQ(brute_stabilizer_order(d.blocks0, 2, 4), 120u);
  EXPECT_TRUE(st.certified);
  EXPECT_TRUE(st.generators_verified);
  EXPECT_EQ(st.enumerated_order, st.order);
}

// Frozen: the full linear stabilizer of the Ex3 block set has order 2880.
TEST(AutSearch, Ex3MatchesBruteForce) {
  const auto d = ex3_design();
  const auto st = ftd::linear_blockset_stabilizer(d.blocks0, 3, 4);
  EXPECT_EQ(brute_stabilizer_order(d.blocks0, 3, 4), 2880u);
  EXPECT_EQ(st.order, 2880u);
  EXPECT_TRUE(st.certified);
  std::uint64_t prod = 1;
  for (auto l : st.orbit_lengths) prod *= l;
  EXPECT_EQ(prod, st.order);
  // The Ex3 groups lie inside it.
  const ftd::PointSpace sp(3, 4);
  for (const auto& m : ftd::atlas("Ex3-SL2(5).2.2").gens) {
    EXPECT_TRUE(ftd::stabilizes_blockset(d.blocks0, sp, ftd::PrimeAffine::from(m)));
  }
}

TEST(AutSearch, FullSubspaceSetGivesGeneralLinearGroup) {
  EXPECT_EQ(ftd::linear_blockset_stabilizer(all_subspaces(2, 3, 2), 2, 3).order, 168u);
  const auto lines = all_subspaces(3, 3, 1);
  ASSERT_EQ(lines.size(), 13u);
  const auto st = ftd::linear_blockset_stabilizer(lines, 3, 3);
  EXPECT_EQ(st.order, 11232u);
  EXPECT_EQ(brute_stabilizer_order(lines, 3, 3), 11232u);
}

TEST(AutSearch, ShuffledCandidateOrderGivesTheSameOrder) {
  const auto d = ex3_design();
  const auto base = ftd::linear_blockset_stabilizer(d.blocks0, 3, 4);
  for (std::uint64_t seed : {1u, 17u, 4242u}) {
    const auto st = ftd::linear_blockset_stabilizer(d.blocks0, 3, 4, {.seed = seed});
    EXPECT_EQ(st.order, base.order) << seed;
    EXPECT_TRUE(st.certified);
  }
}

TEST(AutSearch, StabilizesBlocksetRejectsNonMembers) {
  const auto d = ex3_design();
  const ftd::PointSpace sp(3, 4);
  EXPECT_TRUE(ftd::stabilizes_blockset(d.blocks0, sp, ftd::PrimeAffine::identity(sp)));
  auto f = ftd::make_field(3, 1);
  // Swapping e1 and e2 exchanges two coordinates of the block <e1,e4>.
  const ftd::Matrix swap(f, 4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
  const auto pswap = ftd::PrimeAffine::from(ftd::AffineMap::from_linear(swap));
  const auto st = ftd::linear_blockset_stabilizer(d.blocks0, 3, 4);
  const auto g = ftd::group_from_prime_matrices("stab", 3, st.generators, st.order);
  const auto all = ftd::enumerate_elements(g);
  EXPECT_EQ(all.size(), 2880u);
  EXPECT_EQ(ftd::stabilizes_blockset(d.blocks0, sp, pswap), all.contains(pswap));
}

TEST(AutSearch, D18SearchHitsHaveOrderDivisibleBy54) {
  const auto g0 = ftd::atlas("GammaL1-subgroup", {.p = 2, .degree = 6, .c = 7, .e = 0, .sexp = 3});
  const auto hits = ftd::base_block_search(g0, 8, 2);
  ASSERT_FALSE(hits.empty());
  for (const auto& h : hits) {
    const auto st = ftd::linear_blockset_stabilizer(h.design.blocks0, 2, 6);
    EXPECT_EQ(st.order % 54, 0u);
    EXPECT_EQ(st.order, 54u);
    EXPECT_TRUE(st.certified);
  }
}

TEST(AutSearch, Errors) {
  EXPECT_THROW(ftd::linear_blockset_stabilizer({}, 2, 4), ftd::GroupError);
  EXPECT_THROW(ftd::linear_blockset_stabilizer({{0, 1}}, 2, 13), ftd::GroupError);
}

}  // namespace
