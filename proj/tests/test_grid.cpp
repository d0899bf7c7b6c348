#include <gtest/gtest.h>

#include "fssp/grid.hpp"
#include "oracles.hpp"

using namespace fssp;

TEST(Validate, HoleFreeSquareIsValid) {
  auto r = validate(5, {});
  ASSERT_TRUE(r);
  EXPECT_EQ(r.config->k(), 0);
}

TEST(Validate, BoundaryHoleRejected) {
  auto r = validate(5, {{0, 3}});
  ASSERT_FALSE(r);
  EXPECT_EQ(r.rejection->kind, Rejection::BoundaryHole);
}

TEST(Validate, EnclosedNodeRejected) {
  auto r = validate(5, {{1, 2}, {2, 1}, {2, 3}, {3, 2}});
  ASSERT_FALSE(r);
  EXPECT_EQ(r.rejection->kind, Rejection::Disconnected);
  EXPECT_EQ(r.rejection->witness, (Position{2, 2}));
}

TEST(Validate, DuplicateHolesCollapse) {
  auto r = validate(5, {{2, 2}, {2, 2}});
  ASSERT_TRUE(r);
  EXPECT_EQ(r.config->k(), 1);
}

TEST(Distance, Manhattan) {
  EXPECT_EQ(mh_distance({0, 0}, {0, 0}), 0);
  EXPECT_EQ(mh_distance({0, 0}, {3, 4}), 7);
  EXPECT_EQ(mh_distance({2, 5}, {5, 2}), 6);
}

TEST(Distance, BfsExamples) {
  const auto free5 = validated(5, {});
  EXPECT_EQ(bfs_distance(free5, {0, 0}, {5, 5}), 10);
  const auto c = validated(5, {{2, 2}, {3, 3}});
  EXPECT_EQ(bfs_distance(c, {2, 1}, {2, 3}), 4);
  EXPECT_EQ(bfs_distance(c, {0, 0}, {5, 5}), 10);
  EXPECT_THROW(bfs_distance(c, {0, 0}, {2, 2}), Error);
}

TEST(Distance, ViaExamples) {
  const auto free5 = validated(5, {});
  EXPECT_EQ(via_distance(free5, {0, 0}, {0, 5}, {5, 5}), 10);
  EXPECT_EQ(via_distance(free5, {0, 0}, {0, 5}, {5, 0}), 15);
  EXPECT_EQ(via_distance(free5, {0, 0}, {0, 0}, {0, 0}), 0);
  const auto c = validated(12, {{6, 4}, {7, 5}});
  EXPECT_EQ(via_distance(c, {0, 0}, {0, 12}, {6, 5}), oracle::dist(c, {0, 0}, {0, 12}) + oracle::dist(c, {0, 12}, {6, 5}));
  EXPECT_EQ(via_distance(c, {0, 0}, {0, 12}, {6, 5}), 25);
}

TEST(Distance, BfsMatchesRelaxationOnRandomConfigurations) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int w = 3 + trial % 10;
    const auto c = oracle::random_config(rng, w, 1 + trial % 6);
    const Position src = c.nodes()[rng() % c.nodes().size()];
    const auto ref = oracle::relax_distances(c, src);
    const DistanceField d(c, src);
    for (auto v : c.nodes()) ASSERT_EQ(d(v), ref[v.x][v.y]) << "w=" << w << " v=" << to_string(v);
  }
}

TEST(BoundaryCondition, Examples) {
  const auto free5 = validated(5, {});
  EXPECT_EQ(boundary_condition(free5, {5, 5}), (BoundaryCondition{0, 0, 1, 1}));
  EXPECT_EQ(boundary_condition(free5, {2, 2}), (BoundaryCondition{1, 1, 1, 1}));
  const auto c = validated(5, {{2, 2}, {3, 3}});
  // east (3,3) and south (2,2) are both holes
  EXPECT_EQ(boundary_condition(c, {2, 3}), (BoundaryCondition{0, 1, 1, 0}));
  EXPECT_EQ(boundary_condition(c, {2, 4}), (BoundaryCondition{1, 1, 1, 1}));
  EXPECT_EQ(boundary_condition(c, {3, 2}), (BoundaryCondition{1, 0, 0, 1}));
}

TEST(Pattern, Lookup) {
  const auto c = validated(12, {{5, 7}, {9, 2}});
  const auto uv = zone_union(12, {Zone::U, Zone::V});
  const auto p = pattern_of(c, uv);
  for (const auto& [q, l] : p.assignments) EXPECT_EQ(l, Label::Node);
  EXPECT_EQ(p.assignments.size(), uv.size());

  const auto pw = pattern_of(c, regions(12).W);
  int holes = 0;
  for (const auto& [q, l] : pw.assignments)
    if (l == Label::Hole) {
      ++holes;
      EXPECT_EQ(q, (Position{5, 7}));
    }
  EXPECT_EQ(holes, 1);

  EXPECT_TRUE(pattern_of(c, {}).assignments.empty());
  Pattern node57;
  node57.assignments[{5, 7}] = Label::Node;
  EXPECT_FALSE(has_pattern(c, node57));
  EXPECT_TRUE(has_pattern(c, pattern_of(validated(12, {{10, 3}, {3, 10}}), uv)));
}

TEST(Pattern, SelfAgreement) {
  const auto c = validated(9, {{2, 3}, {6, 6}, {4, 1}});
  const auto r = regions(9);
  for (const Region* z : {&r.U, &r.V, &r.W, &r.X, &r.H0, &r.H1, &r.H2}) EXPECT_TRUE(has_pattern(c, pattern_of(c, *z)));
}

TEST(Regions, ZonesPartitionTheSquare) {
  for (int w = 2; w <= 15; ++w) {
    const auto r = regions(w);
    const std::size_t total = r.U.size() + r.V.size() + r.W.size() + r.X.size();
    EXPECT_EQ(total, static_cast<std::size_t>((w + 1) * (w + 1)));
    const int f = w / 2;
    EXPECT_EQ(r.U.size(), static_cast<std::size_t>(f * f));
    EXPECT_EQ(r.V.size(), static_cast<std::size_t>(2 * f + 1));
    EXPECT_EQ(r.W.size(), static_cast<std::size_t>(w % 2 == 0 ? 2 * f + 2 : 2 * f + 3));
    EXPECT_EQ(r.v_cnt, (Position{f, f}));
  }
}

TEST(Regions, HalfPlanesContainTheirWitnessCorners) {
  for (int w = 4; w <= 14; ++w)
    for (auto h : kHalfPlanes) {
      const auto r = regions(w);
      const auto& hp = r.half(h);
      EXPECT_NE(std::find(hp.begin(), hp.end(), witness_corner(w, h)), hp.end());
    }
}
