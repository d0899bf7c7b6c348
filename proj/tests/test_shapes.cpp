#include <gtest/gtest.h>

#include "fssp/shapes.hpp"
#include "fssp/timebounds.hpp"
#include "oracles.hpp"

using namespace fssp;

namespace {

const auto S4 = BarrierShape::from_holes(2, 2, {{0, 1}, {1, 0}});
const auto S5 = BarrierShape::from_holes(2, 2, {{0, 0}, {1, 1}});

// The shape at offset (1,1) of a square whose cells beyond the enlarged
// rectangle are filled with holes, so plain grid distances from the frame
// corners are the enlarged-rectangle distances.
std::pair<int, int> embedded_d0_d1(const BarrierShape& s, Position p) {
  const int w = std::max(s.W, s.H) + 1;
  std::vector<Position> hs;
  for (auto h : s.hole_list()) hs.push_back(h + Position{1, 1});
  for (int y = 0; y <= w; ++y)
    for (int x = 0; x <= w; ++x)
      if (x > s.W + 1 || y > s.H + 1) hs.push_back({x, y});
  const auto c = Configuration::unchecked(w, hs);
  const Position q = p + Position{1, 1};
  return {oracle::dist(c, {0, s.H + 1}, q), oracle::dist(c, {s.W + 1, 0}, q)};
}

}  // namespace

TEST(Shapes, CountsForSmallK) {
  const long long expected[] = {0, 1, 5, 29, 224, 2220};
  for (int k = 1; k <= 5; ++k) {
    long long n = 0;
    enumerate_shapes(k, [&](const BarrierShape& s) {
      ++n;
      EXPECT_TRUE(s.covers_rows_and_columns());
      EXPECT_LE(s.holes(), k);
    });
    EXPECT_EQ(n, expected[k]) << "k=" << k;
  }
}

TEST(Shapes, TableDistances) {
  EXPECT_EQ(d0_d1(S5, {0, 1}), std::make_pair(2, 6));
  EXPECT_EQ(d0_d1(S4, {0, 0}), std::make_pair(3, 3));
  EXPECT_EQ(d0_d1(S5, {1, 0}), std::make_pair(6, 2));
  EXPECT_THROW(d0_d1(S5, {0, 0}), Error);
}

TEST(Shapes, DistancesMatchEmbeddedGridOracle) {
  for (int k = 1; k <= 4; ++k)
    enumerate_shapes(k, [&](const BarrierShape& s) {
      for (int y = 0; y < s.H; ++y)
        for (int x = 0; x < s.W; ++x)
          if (!s.is_hole({x, y})) ASSERT_EQ(d0_d1(s, {x, y}), embedded_d0_d1(s, {x, y}));
    });
}

TEST(Shapes, ExcessValues) {
  EXPECT_EQ(e_of(S5, {0, 1}, 2), 1);
  EXPECT_EQ(e_of(S4, {0, 0}, 0), 0);
  EXPECT_EQ(e_of(S5, {0, 1}, 0), -1);

  auto a = evaluate(S5, {0, 1});
  EXPECT_EQ(a.e_max, 1);
  EXPECT_EQ(a.delta_opt, 2);
  EXPECT_EQ(a.epsilon_opt, 1);
  auto b = evaluate(S4, {1, 1});
  EXPECT_EQ(b.e_max, 0);
  EXPECT_EQ(b.delta_opt, 0);
  EXPECT_EQ(b.epsilon_opt, 0);
  auto big = evaluate_distances(4, 5, {2, 1}, 7, 8);
  EXPECT_EQ(big.e_max, 2);
  EXPECT_EQ(big.delta_opt, 1);
}

TEST(Shapes, EmaxIsTheBestDelta) {
  for (int k = 1; k <= 4; ++k)
    enumerate_shapes(k, [&](const BarrierShape& s) {
      for (int y = 0; y < s.H; ++y)
        for (int x = 0; x < s.W; ++x) {
          if (s.is_hole({x, y})) continue;
          int best = -1000;
          for (int d = -40; d <= 40; ++d) best = std::max(best, e_of(s, {x, y}, d));
          ASSERT_EQ(evaluate(s, {x, y}).e_max, best);
        }
    });
}

TEST(Ck, PublishedRowsUpToFour) {
  for (int k = 2; k <= 4; ++k) {
    const auto r = compute_ck(k);
    const auto& pub = kPublishedCk[k - 2];
    EXPECT_EQ(r.c_k, pub.c_k);
    EXPECT_EQ(r.shapes, pub.shapes);
    EXPECT_EQ(r.pairs, pub.pairs);
    EXPECT_EQ(r.argmax_pairs, pub.argmax_pairs);
  }
}

TEST(Ck, ArgmaxListForTwoHoles) {
  CkOptions opt;
  opt.list_argmax = true;
  const auto r = compute_ck(2, opt);
  ASSERT_EQ(r.argmax.size(), 2u);
  for (const auto& a : r.argmax) {
    EXPECT_EQ(a.shape, S5);
    EXPECT_EQ(evaluate(a.shape, a.p).e_max, 1);
  }
}

TEST(Ck, ThreadCountDoesNotChangeResult) {
  CkOptions one, four;
  four.jobs = 4;
  const auto a = compute_ck(4, one), b = compute_ck(4, four);
  EXPECT_EQ(a.c_k, b.c_k);
  EXPECT_EQ(a.pairs, b.pairs);
  EXPECT_EQ(a.argmax_pairs, b.argmax_pairs);
}

// The worst two-hole square of size 12 exceeds 2w by exactly c_2.
TEST(Ck, TwoHoleMaximumOverAllSquares) {
  int worst = 0;
  for (const auto& c : oracle::all_two_hole(12)) worst = std::max(worst, oracle::max_t(c));
  EXPECT_EQ(worst, 2 * 12 + compute_ck(2).c_k);
}

TEST(Ck, Bounds) {
  EXPECT_EQ(ck_bounds(3), std::make_pair(1, 21));
  EXPECT_EQ(ck_bounds(5), std::make_pair(3, 45));
  EXPECT_EQ(ck_bounds(9), std::make_pair(7, 117));
}

TEST(Ck, Hkw) {
  EXPECT_EQ(h_kw(2, 12), 25);
  EXPECT_EQ(h_kw(3, 20), 41);
  EXPECT_FALSE(h_kw(2, 5).has_value());
}

TEST(Ck, BudgetRefusal) {
  EXPECT_THROW(compute_ck(8), Error);
  try {
    compute_ck(8);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}
