//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "sshg/hull.h"

#include <cmath>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.h"
#include "sshg/error.h"
#include "synth.h"

namespace sshg {
namespace {

using testing::oracle_connected;
using testing::oracle_hull_edges;
using testing::random_sphere_points;

std::vector<std::pair<int, int>> as_pairs(const std::vector<IndexPair> &e) {
  std::vector<std::pair<int, int>> out;
  for (IndexPair p: e)
    out.emplace_back(p.i, p.j);
  return out;
}

TEST(ConvexHullSphere, Tetrahedron) {
  std::vector<Vec3> pts { Vec3(1, 1, 1), Vec3(1, -1, -1), Vec3(-1, 1, -1),
                          Vec3(-1, -1, 1) };
  for (Vec3 &p: pts)
    p.normalize();
  EXPECT_EQ(convex_hull_sphere(pts).size(), 6U);
}

TEST(ConvexHullSphere, Octahedron) {
  std::vector<Vec3> pts { Vec3(1, 0, 0),  Vec3(-1, 0, 0), Vec3(0, 1, 0),
                          Vec3(0, -1, 0), Vec3(0, 0, 1),  Vec3(0, 0, -1) };
  auto edges = convex_hull_sphere(pts);
  EXPECT_EQ(edges.size(), 12U);
  // Antipodal vertices are never adjacent.
  std::set<IndexPair> set(edges.begin(), edges.end());
  EXPECT_FALSE(set.count({ 0, 1 }));
  EXPECT_FALSE(set.count({ 2, 3 }));
  EXPECT_FALSE(set.count({ 4, 5 }));
}

TEST(ConvexHullSphere, SmallInputs) {
  std::vector<Vec3> two { Vec3(0, 0, 1), Vec3(0, 0, -1) };
  auto e = convex_hull_sphere(two);
  ASSERT_EQ(e.size(), 1U);
  EXPECT_EQ(e[0], (IndexPair { 0, 1 }));
  EXPECT_TRUE(convex_hull_sphere(std::vector<Vec3> { Vec3(1, 0, 0) }).empty());
  EXPECT_THROW(convex_hull_sphere(std::vector<Vec3> {}), Error);
}

TEST(ConvexHullSphere, AgreesWithBruteForce) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + trial % 22;
    auto pts = random_sphere_points(n, rng);
    auto edges = convex_hull_sphere(pts);
    std::set<std::pair<int, int>> got;
    for (IndexPair p: edges)
      got.insert({ p.i, p.j });
    ASSERT_EQ(got, oracle_hull_edges(pts)) << "trial " << trial;
  }
}

TEST(ConvexHullSphere, SparseAndConnected) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> size(3, 200);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = size(rng);
    auto pts = random_sphere_points(n, rng);
    auto edges = convex_hull_sphere(pts);
    ASSERT_LE(static_cast<int>(edges.size()), 3 * n - 6) << trial;
    ASSERT_TRUE(oracle_connected(n, as_pairs(edges))) << trial;
    // Points on a sphere are all hull vertices, so the hull triangulates.
    if (n >= 4)
      ASSERT_EQ(static_cast<int>(edges.size()), 3 * n - 6) << trial;
  }
}

TEST(ConvexHullSphere, Deterministic) {
  std::mt19937_64 rng(5);
  auto pts = random_sphere_points(150, rng);
  EXPECT_EQ(convex_hull_sphere(pts), convex_hull_sphere(pts));
}

TEST(ConvexHullSphere, GreatCircleFallsBackToPlanarHull) {
  // All directions on the equator: coplanar after projection.
  std::vector<Vec3> pts;
  for (int k = 0; k < 9; ++k) {
    double a = 0.7 * k;
    pts.emplace_back(std::cos(a), std::sin(a), 0);
  }
  auto edges = convex_hull_sphere(pts);
  EXPECT_LE(static_cast<int>(edges.size()), 3 * 9 - 6);
  EXPECT_TRUE(oracle_connected(9, as_pairs(edges)));
}

TEST(ConvexHullSphere, PlanarWithInteriorPoints) {
  // A planar triangle with points inside it, not on a sphere.
  std::vector<Vec3> pts { Vec3(0, 0, 0), Vec3(4, 0, 0), Vec3(0, 4, 0),
                          Vec3(1, 1, 0), Vec3(0.5, 2, 0), Vec3(2, 0.7, 0) };
  auto edges = convex_hull_sphere(pts);
  EXPECT_LE(static_cast<int>(edges.size()), 3 * 6 - 6);
  EXPECT_TRUE(oracle_connected(6, as_pairs(edges)));
}

TEST(ConvexHullSphere, HemisphereCluster) {
  // Directions crowded in one cap exercise the leftover insertion path.
  std::mt19937_64 rng(77);
  std::normal_distribution<double> g(0, 0.05);
  std::vector<Vec3> pts;
  for (int i = 0; i < 80; ++i)
    pts.push_back(Vec3(g(rng), g(rng), 1).normalized());
  auto edges = convex_hull_sphere(pts);
  EXPECT_LE(static_cast<int>(edges.size()), 3 * 80 - 6);
  EXPECT_TRUE(oracle_connected(80, as_pairs(edges)));
}

}  // namespace
}  // namespace sshg
