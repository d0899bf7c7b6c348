#include <gtest/gtest.h>

#include "fssp/barriers.hpp"
#include "oracles.hpp"

using namespace fssp;

namespace {

std::set<oracle::Box> as_boxes(const std::vector<Rect>& rs) {
  std::set<oracle::Box> out;
  for (const auto& r : rs) out.insert({r.x0, r.y0, r.x1, r.y1});
  return out;
}

}  // namespace

TEST(Barrier, Examples) {
  const auto c = validated(5, {{2, 2}, {3, 3}});
  EXPECT_TRUE(is_barrier(c, {2, 2, 3, 3}));
  EXPECT_FALSE(is_barrier(c, {1, 2, 3, 3}));
  EXPECT_TRUE(is_barrier(c, {2, 2, 2, 2}));
}

TEST(MaximalBarriers, Examples) {
  EXPECT_TRUE(maximal_barriers(validated(7, {})).empty());
  EXPECT_EQ(as_boxes(maximal_barriers(validated(5, {{2, 2}, {3, 3}}))), (std::set<oracle::Box>{{2, 2, 3, 3}}));
  EXPECT_EQ(as_boxes(maximal_barriers(validated(5, {{1, 1}, {3, 3}}))),
            (std::set<oracle::Box>{{1, 1, 1, 1}, {3, 3, 3, 3}}));
  EXPECT_EQ(as_boxes(maximal_barriers_bruteforce(validated(6, {{2, 2}, {2, 3}, {3, 2}}))),
            (std::set<oracle::Box>{{2, 2, 3, 3}}));
}

TEST(MaximalBarriers, SplittingMatchesIndependentOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const int w = 3 + trial % 9;
    const auto c = oracle::random_config(rng, w, 1 + trial % 7);
    ASSERT_EQ(as_boxes(maximal_barriers(c)), oracle::maximal_boxes(c));
  }
}

TEST(MaximalBarriers, StructuralInvariants) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int w = 4 + trial % 16;
    const auto c = oracle::random_config(rng, w, 1 + trial % 10);
    const auto bars = maximal_barriers(c);
    for (std::size_t i = 0; i < bars.size(); ++i) {
      EXPECT_GE(bars[i].x0, 1);
      EXPECT_GE(bars[i].y0, 1);
      EXPECT_LE(bars[i].x1, w - 1);
      EXPECT_LE(bars[i].y1, w - 1);
      for (std::size_t j = i + 1; j < bars.size(); ++j) EXPECT_FALSE(touches(bars[i], bars[j]));
    }
    for (auto h : c.holes()) EXPECT_TRUE(containing_barrier(bars, h).has_value());
  }
}

TEST(CornerAccess, Examples) {
  const auto free6 = validated(6, {});
  for (auto v : free6.nodes()) EXPECT_TRUE(corner_mh_access(free6, {6, 0}, v));
  const auto c = validated(5, {{2, 2}, {3, 3}});
  EXPECT_TRUE(corner_mh_access(c, {0, 0}, {4, 1}));
  EXPECT_TRUE(corner_mh_access(c, {0, 0}, {2, 3}));
  EXPECT_THROW(corner_mh_access(c, {0, 2}, {4, 1}), Error);
}

TEST(CornerAccess, OutsideBarriersDistanceIsManhattan) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 80; ++trial) {
    const int w = 4 + trial % 10;
    const auto c = oracle::random_config(rng, w, 1 + trial % 6);
    const auto bars = maximal_barriers(c);
    for (Position corner : {Position{0, 0}, Position{0, w}, Position{w, 0}, Position{w, w}}) {
      const auto d = oracle::relax_distances(c, corner);
      for (auto v : c.nodes())
        if (!containing_barrier(bars, v)) EXPECT_EQ(d[v.x][v.y], mh_distance(corner, v));
    }
  }
}
