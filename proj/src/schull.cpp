//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "sshg/schull.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <unordered_map>

#include "sshg/error.h"
#include "sshg/hull.h"

namespace sshg {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

GeometricGraph base_graph(const PointCloud &cloud) {
  GeometricGraph g;
  g.node_coords.assign(cloud.points().begin(), cloud.points().end());
  g.node_features.assign(cloud.features().begin(), cloud.features().end());
  g.centroid = centroid(cloud);
  g.node_attrs.reserve(cloud.size());
  for (const Vec3 &p: cloud.points())
    g.node_attrs.push_back((p - g.centroid).norm());
  return g;
}

double arc_angle(const Vec3 &a, const Vec3 &b) {
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

void attach_hull_edges(GeometricGraph &g, const PointCloud &hull_cloud) {
  PointCloud sphere = project_to_sphere(hull_cloud, centroid(hull_cloud));
  for (IndexPair e: convex_hull_sphere(sphere.points())) {
    g.edges.push_back({ e.i, e.j,
                        (g.node_coords[e.i] - g.node_coords[e.j]).norm(),
                        arc_angle(sphere[e.i], sphere[e.j]) });
  }
}

}  // namespace

Vec3 jitter_offset(std::size_t index) {
  std::uint64_t state = 0x4a49545445520000ULL ^ index;
  Vec3 v;
  do {
    for (int k = 0; k < 3; ++k) {
      state = splitmix64(state);
      v[k] = static_cast<double>(state >> 11) * 0x1.0p-53 * 2.0 - 1.0;
    }
  } while (v.norm() < 1e-3);
  return v.normalized() * kJitterMagnitude;
}

GeometricGraph build_schull(const PointCloud &cloud,
                            const SchullOptions &options) {
  GeometricGraph g = base_graph(cloud);
  if (cloud.size() == 1)
    return g;

  try {
    attach_hull_edges(g, cloud);
    return g;
  } catch (const Error &e) {
    if (!options.jitter || !is_degeneracy(e.kind()))
      throw;
  }

  std::vector<Vec3> shifted;
  shifted.reserve(cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i)
    shifted.push_back(cloud[i] + jitter_offset(i));
  g.edges.clear();
  attach_hull_edges(g, PointCloud(std::move(shifted)));
  g.jittered = true;
  return g;
}

namespace {

struct CellKey {
  std::int64_t x, y, z;
  bool operator==(const CellKey &) const = default;
};

struct CellHash {
  std::size_t operator()(const CellKey &k) const {
    std::uint64_t h = splitmix64(static_cast<std::uint64_t>(k.x));
    h = splitmix64(h ^ static_cast<std::uint64_t>(k.y));
    h = splitmix64(h ^ static_cast<std::uint64_t>(k.z));
    return static_cast<std::size_t>(h);
  }
};

// Calls visit(i, j) for every pair i < j within cutoff, i ascending and j
// ascending per i.
void for_each_radius_pair(std::span<const Vec3> pts, double cutoff,
                          const std::function<void(int, int)> &visit) {
  if (!(cutoff > 0))
    throw Error(ErrorKind::kInvalidArgument, "cutoff must be positive");

  auto key_of = [cutoff](const Vec3 &p) {
    return CellKey { static_cast<std::int64_t>(std::floor(p.x() / cutoff)),
                     static_cast<std::int64_t>(std::floor(p.y() / cutoff)),
                     static_cast<std::int64_t>(std::floor(p.z() / cutoff)) };
  };

  std::unordered_map<CellKey, std::vector<int>, CellHash> cells;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i)
    cells[key_of(pts[i])].push_back(i);

  const double cutoff2 = cutoff * cutoff;
  std::vector<int> hits;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    CellKey k = key_of(pts[i]);
    hits.clear();
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        for (std::int64_t dz = -1; dz <= 1; ++dz) {
          auto it = cells.find({ k.x + dx, k.y + dy, k.z + dz });
          if (it == cells.end())
            continue;
          for (int j: it->second) {
            if (j > i && (pts[i] - pts[j]).squaredNorm() <= cutoff2)
              hits.push_back(j);
          }
        }
      }
    }
    std::sort(hits.begin(), hits.end());
    for (int j: hits)
      visit(i, j);
  }
}

}  // namespace

GeometricGraph radius_graph(const PointCloud &cloud, double cutoff) {
  GeometricGraph g = base_graph(cloud);
  for_each_radius_pair(cloud.points(), cutoff, [&](int i, int j) {
    g.edges.push_back(
        { i, j, (g.node_coords[i] - g.node_coords[j]).norm(), 0.0 });
  });
  return g;
}

std::size_t count_radius_edges(std::span<const Vec3> points, double cutoff) {
  std::size_t count = 0;
  for_each_radius_pair(points, cutoff, [&](int, int) { ++count; });
  return count;
}

}  // namespace sshg
