#include <gtest/gtest.h>

#include "fssp/timebounds.hpp"
#include "oracles.hpp"

using namespace fssp;

namespace {

int oracle_t(const Configuration& c, Position v) {
  const int w = c.size();
  const auto a = oracle::relax_distances(c, {0, w}), b = oracle::relax_distances(c, {w, 0});
  return std::min(a[0][0] + a[v.x][v.y], b[0][0] + b[v.x][v.y]);
}

}  // namespace

TEST(TField, Examples) {
  const auto free5 = validated(5, {});
  EXPECT_EQ(t_of(free5, {5, 5}), 10);
  EXPECT_EQ(t_of(free5, {0, 0}), 10);
  const auto c = validated(12, {{6, 4}, {7, 5}});
  EXPECT_EQ(t_of(c, {6, 5}), 25);
  EXPECT_EQ(t_of(c, {6, 5}), oracle_t(c, {6, 5}));
  EXPECT_EQ(max_t(validated(7, {})), 14);
  EXPECT_EQ(max_t(c), 25);
  EXPECT_EQ(max_t(validated(12, {{3, 3}, {8, 8}})), 24);
}

TEST(TField, MatchesRelaxationOracle) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const int w = 4 + trial % 12;
    const auto c = oracle::random_config(rng, w, 1 + trial % 6);
    const TField tf(c);
    for (auto v : c.nodes()) ASSERT_EQ(tf(v), oracle_t(c, v));
    EXPECT_EQ(tf.max(), oracle::max_t(c));
  }
}

TEST(Formula, Examples) {
  const auto c = validated(12, {{6, 4}, {7, 5}});
  const auto terms = t_formula_terms(c, {6, 5}, maximal_barriers(c));
  EXPECT_EQ(terms.delta, 2);
  EXPECT_EQ(terms.W, 2);
  EXPECT_EQ(terms.H, 2);
  EXPECT_EQ(terms.d0, 2);
  EXPECT_EQ(terms.d1, 6);
  EXPECT_EQ(terms.t, 25);
  EXPECT_EQ(t_formula(c, {7, 4}), oracle_t(c, {7, 4}));
  try {
    t_formula(c, {1, 1});
    FAIL() << "expected NotInBarrier";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInBarrier);
  }
}

TEST(Formula, AgreesWithOracleInsideBarriers) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const int w = 10 + trial % 11;
    const auto c = oracle::random_config(rng, w, 1 + trial % 6);
    const auto bars = maximal_barriers(c);
    for (auto v : c.nodes())
      if (containing_barrier(bars, v)) ASSERT_EQ(t_formula_terms(c, v, bars).t, oracle_t(c, v)) << to_string(v);
  }
}

TEST(Critical, Examples) {
  EXPECT_TRUE(has_critical_pair(validated(12, {{6, 4}, {7, 5}})));
  EXPECT_EQ(critical_holes(validated(12, {{6, 4}, {7, 5}})).size(), 2u);
  EXPECT_TRUE(has_critical_pair(validated(12, {{4, 6}, {5, 7}})));
  EXPECT_FALSE(has_critical_pair(validated(12, {{3, 3}, {8, 8}})));
  EXPECT_TRUE(critical_holes(validated(12, {{3, 3}, {8, 8}})).empty());

  auto a = critical_pair_theorem_check(validated(12, {{6, 4}, {7, 5}}));
  EXPECT_TRUE(a.has_critical_pair && a.max_is_2w_plus_1());
  auto b = critical_pair_theorem_check(validated(12, {{3, 3}, {8, 8}}));
  EXPECT_TRUE(!b.has_critical_pair && !b.max_is_2w_plus_1());
  auto d = critical_pair_theorem_check(validated(12, {{5, 7}, {9, 2}}));
  EXPECT_TRUE(!d.has_critical_pair && !d.max_is_2w_plus_1());
}

TEST(Critical, MaxTMatchesPairsOnAllSquaresOfSizeTwelve) {
  for (const auto& c : oracle::all_two_hole(12)) {
    const int m = oracle::max_t(c);
    ASSERT_TRUE(m == 24 || m == 25);
    ASSERT_EQ(m == 25, has_critical_pair(c)) << to_string(c.holes()[0]) << to_string(c.holes()[1]);
  }
}

TEST(Equiv, Reflexive) {
  const auto c = validated(9, {{2, 3}, {5, 5}});
  for (auto v : c.nodes()) EXPECT_TRUE(equiv_prime(c, c, 18, v));
}

TEST(Equiv, DifferentSizesNeverEquivalentAtFullHorizon) {
  const auto a = validated(12, {{3, 3}, {8, 8}});
  const auto b = validated(13, {{3, 3}, {8, 8}});
  ASSERT_LE(max_t(a), 24);
  for (auto v : a.nodes())
    if (b.is_node(v)) EXPECT_FALSE(equiv_prime(a, b, 24, v));
}

TEST(Equiv, PatternMoves) {
  const auto a = validated(12, {{10, 3}, {3, 10}});
  EXPECT_TRUE(pattern_move_equiv(a, a, HalfPlane::H1));
  EXPECT_TRUE(pattern_move_equiv(a, validated(12, {{10, 3}, {9, 11}}), HalfPlane::H2));
  EXPECT_FALSE(pattern_move_equiv(validated(12, {{5, 7}, {9, 2}}), validated(12, {{6, 7}, {9, 2}}), HalfPlane::H1));
}

TEST(Certificate, CriticalPairGivesEmptyChain) {
  const auto c = validated(12, {{6, 4}, {7, 5}});
  auto r = lower_bound_certificate(c);
  ASSERT_TRUE(r.chain);
  EXPECT_TRUE(r.chain->steps.empty());
  EXPECT_TRUE(verify_certificate(*r.chain, true).ok);
}

TEST(Certificate, TwoStepChain) {
  const auto c = validated(12, {{10, 3}, {3, 10}});
  auto r = lower_bound_certificate(c);
  ASSERT_TRUE(r.chain);
  EXPECT_EQ(r.chain->steps.size(), 2u);
  const auto check = verify_certificate(*r.chain, true);
  EXPECT_TRUE(check.ok) << check.failure;
  EXPECT_TRUE(has_critical_pair(r.chain->final));
}

TEST(Certificate, NoChainForTwoWConfiguration) {
  auto r = lower_bound_certificate(validated(12, {{3, 3}, {8, 8}}));
  EXPECT_FALSE(r.chain);
  EXPECT_EQ(r.outcome, SearchOutcome::NotFoundExhausted);
}

TEST(Certificate, TamperedChainRejected) {
  auto r = lower_bound_certificate(validated(12, {{10, 3}, {3, 10}}));
  ASSERT_TRUE(r.chain);
  auto bad = *r.chain;
  bad.steps[0].to = {2, 2};
  EXPECT_FALSE(verify_certificate(bad).ok);
}
