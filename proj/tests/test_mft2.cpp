#include <gtest/gtest.h>

#include "fssp/mft2.hpp"
#include "oracles.hpp"

using namespace fssp;

namespace {

HoleTypeProfile profile(int u, int v, int w, int x) {
  HoleTypeProfile t;
  t.nU = u, t.nV = v, t.nW = w, t.nX = x;
  return t;
}

bool same_counts(const HoleTypeProfile& a, const HoleTypeProfile& b) {
  return a.nU == b.nU && a.nV == b.nV && a.nW == b.nW && a.nX == b.nX;
}

std::vector<std::vector<Position>> sites(const MessagePlan& p) {
  std::vector<std::vector<Position>> out;
  for (const auto& g : p.groups) {
    out.emplace_back();
    for (const auto& m : g) out.back().push_back(m.site);
  }
  return out;
}

}  // namespace

TEST(TypeOf, Examples) {
  EXPECT_TRUE(same_counts(type_of(validated(12, {{8, 2}, {2, 8}})), profile(0, 0, 0, 2)));
  const auto b = type_of(validated(12, {{5, 7}, {9, 2}}));
  EXPECT_TRUE(same_counts(b, profile(0, 0, 1, 1)));
  EXPECT_EQ(b.w_critical, 1);
  EXPECT_TRUE(same_counts(type_of(validated(12, {{3, 3}, {8, 8}})), profile(1, 0, 0, 1)));
  EXPECT_THROW(type_of(validated(12, {{3, 3}})), Error);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(validated(12, {{8, 2}, {2, 8}})).value, 25);
  EXPECT_EQ(classify(validated(12, {{4, 6}, {5, 7}})).value, 25);
  const auto v = classify(validated(12, {{3, 3}, {8, 8}}));
  EXPECT_EQ(v.value, 24);
  ASSERT_TRUE(v.witness && v.report);
  EXPECT_TRUE(v.report->ok());
  EXPECT_EQ(classify(validated(11, {{2, 4}, {9, 9}})).value, 22);
}

TEST(Classify, FiveExtraStepInstances) {
  const std::vector<std::vector<Position>> cases = {
      {{8, 2}, {2, 8}}, {{5, 7}, {9, 2}}, {{7, 5}, {2, 9}}, {{4, 6}, {5, 7}}, {{4, 2}, {5, 3}}};
  for (const auto& hs : cases) {
    const auto c = validated(12, hs);
    const auto v = classify(c);
    EXPECT_EQ(v.value, 25);
    ASSERT_TRUE(v.chain);
    EXPECT_TRUE(verify_certificate(*v.chain, true).ok);
  }
}

TEST(Classify, Errors) {
  try {
    classify(validated(10, {{3, 3}, {6, 6}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeTooSmall);
  }
  try {
    classify(validated(12, {{3, 3}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WrongHoleCount);
  }
  try {
    build_witness_plan(validated(12, {{8, 2}, {2, 8}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotUpperBoundCase);
  }
}

TEST(WitnessPlan, CaseShapes) {
  const auto one = build_witness_plan(validated(12, {{2, 2}, {3, 1}}));
  EXPECT_EQ(one.case_label, "1");
  EXPECT_EQ(sites(one.plan), (std::vector<std::vector<Position>>{{{6, 6}}}));
  EXPECT_EQ(one.plan.checked_region.size(), zone_union(12, {Zone::U, Zone::V}).size());

  const auto odd = build_witness_plan(validated(11, {{4, 6}, {6, 6}}));
  EXPECT_EQ(odd.case_label, "2.1.2.2");
  EXPECT_EQ(sites(odd.plan), (std::vector<std::vector<Position>>{{{5, 6}}, {{6, 5}}}));
  EXPECT_EQ(odd.plan.checked_region.size(), zone_union(11, {Zone::U, Zone::V, Zone::W}).size());

  const auto three = build_witness_plan(validated(12, {{6, 7}, {7, 6}}));
  EXPECT_EQ(three.case_label, "2.2");
  EXPECT_EQ(sites(three.plan), (std::vector<std::vector<Position>>{{{6, 6}}, {{5, 7}, {7, 5}}}));
}

// Every plan at size 11 must pass its own checks, fire exactly at 2w, and
// agree with an independently computed maximum of T.
TEST(WitnessPlan, SampledSquaresOfSizeEleven) {
  const auto all = oracle::all_two_hole(11);
  const CertificateProver prover(11);
  for (std::size_t i = 0; i < all.size(); i += 23) {
    const auto& c = all[i];
    const auto v = classify(c, &prover);
    const int m = oracle::max_t(c);
    if (v.value == 22) {
      ASSERT_TRUE(v.report && v.report->ok()) << to_string(c.holes()[0]) << to_string(c.holes()[1]);
      EXPECT_EQ(run_message_plan(c, v.witness->plan).simultaneous(), std::optional<int>(22));
      EXPECT_EQ(m, 22);
    } else {
      ASSERT_EQ(v.value, 23);
      ASSERT_TRUE(v.chain);
      EXPECT_TRUE(verify_certificate(*v.chain).ok);
    }
  }
}

TEST(Appendix, Examples) {
  EXPECT_EQ(thm_appendix_check(validated(12, {{6, 7}, {7, 6}}), {6, 6}, {12, 12}), AppendixVerdict::Exception1);
  EXPECT_EQ(thm_appendix_check(validated(12, {{5, 3}, {6, 4}}), {6, 3}, {0, 12}), AppendixVerdict::Exception2);
  EXPECT_THROW(thm_appendix_check(validated(12, {{5, 3}, {6, 4}}), {9, 9}, {0, 12}), Error);
}

// With both holes far from U and V every target meets the bound.
TEST(Appendix, RemoteHolesAlwaysHold) {
  const auto c = validated(12, {{10, 10}, {11, 2}});
  for (auto v : zone_union(12, {Zone::U, Zone::V})) {
    const auto d = oracle::relax_distances(c, v);
    for (auto vp : c.nodes()) {
      ASSERT_EQ(thm_appendix_check(c, v, vp), AppendixVerdict::Holds);
      ASSERT_LE(mh_distance({0, 0}, v) + d[vp.x][vp.y], 24);
    }
  }
}
