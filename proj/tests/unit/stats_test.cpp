//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "sshg/stats.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "sshg/error.h"
#include "synth.h"

namespace sshg {
namespace {

TEST(ComputeStats, CollinearCasAtFourAngstrom) {
  std::vector<Vec3> ca { { 0, 0, 0 }, { 3.8, 0, 0 }, { 7.6, 0, 0 } };
  const double cutoffs[] = { 4.0 };
  StructureStats s = compute_stats("line", {}, ca, cutoffs);
  ASSERT_EQ(s.radius_edges.size(), 1U);
  EXPECT_EQ(s.radius_edges[0], 2U);
}

TEST(ComputeStats, NoCutoffs) {
  HierarchicalGraph h = build_hierarchy(testing::load_fixture("helix24"));
  auto ca = testing::load_fixture("helix24").ca_coords();
  StructureStats s = compute_stats("helix24", { &h, 1 }, ca, {});
  EXPECT_TRUE(s.cutoffs.empty());
  EXPECT_TRUE(s.radius_edges.empty());
  EXPECT_EQ(s.residues, 24U);
  EXPECT_TRUE(s.bound_ok);
  EXPECT_EQ(s.bound_3n, 72U);
}

TEST(ComputeStats, MatchesOracleAndGrowsWithCutoff) {
  for (const char *name: { "compact60", "compact90", "meander" }) {
    ProteinChain chain = testing::load_fixture(name);
    HierarchicalGraph h = build_hierarchy(chain);
    auto ca = chain.ca_coords();
    StructureStats s = compute_stats(name, { &h, 1 }, ca, kDefaultCutoffs);
    ASSERT_EQ(s.radius_edges.size(), std::size(kDefaultCutoffs));
    for (std::size_t k = 0; k < s.cutoffs.size(); ++k) {
      EXPECT_EQ(s.radius_edges[k],
                testing::oracle_radius_count(ca, s.cutoffs[k]));
      EXPECT_DOUBLE_EQ(s.edge_ratio[k],
                       static_cast<double>(s.radius_edges[k])
                           / static_cast<double>(s.sshg_edges()));
      if (k > 0)
        EXPECT_GE(s.radius_edges[k], s.radius_edges[k - 1]);
    }
    EXPECT_GE(s.radius_edges.back(), s.sshg_edges()) << name;
  }
}

TEST(ComputeStats, SumsOverChains) {
  HierarchicalGraph a = build_hierarchy(testing::load_fixture("helix12"));
  HierarchicalGraph b = build_hierarchy(testing::load_fixture("hairpin"));
  std::vector<HierarchicalGraph> both { a, b };
  StructureStats s = compute_stats("pair", both, {}, {});
  EXPECT_EQ(s.residues, 28U);
  EXPECT_EQ(s.units, a.intra.size() + b.intra.size());
  EXPECT_EQ(s.sshg_edges(), total_edges(a).total() + total_edges(b).total());
}

TEST(Summarize, MeansOverStructures) {
  StructureStats x, y;
  x.residues = 10;
  y.residues = 30;
  x.cutoffs = y.cutoffs = { 8.0 };
  x.radius_edges = { 20 };
  y.radius_edges = { 60 };
  x.edge_ratio = { 2.0 };
  y.edge_ratio = { 3.0 };
  std::vector<StructureStats> rows { x, y };
  StatsSummary m = summarize(rows);
  EXPECT_EQ(m.structures, 2U);
  EXPECT_DOUBLE_EQ(m.mean_residues, 20.0);
  EXPECT_DOUBLE_EQ(m.mean_radius_edges[0], 40.0);
  EXPECT_DOUBLE_EQ(m.mean_edge_ratio[0], 2.5);

  rows[1].cutoffs = { 10.0 };
  EXPECT_THROW(summarize(rows), Error);
  EXPECT_EQ(summarize({}).structures, 0U);
}

}  // namespace
}  // namespace sshg
