//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SSHG_SCHULL_H_
#define SSHG_SCHULL_H_

#include <cstdint>
#include <vector>

#include "sshg/geometry.h"

namespace sshg {

struct GraphEdge {
  int i;  // i < j
  int j;
  double length;  // |x_i - x_j|, A
  double tau;     // radians; see build_schull
};

/// Sparse geometric graph over a point cloud. node_attrs[i] is the distance
/// of node i from the centroid.
struct GeometricGraph {
  std::vector<Vec3> node_coords;
  std::vector<double> node_attrs;
  std::vector<std::int64_t> node_features;
  std::vector<GraphEdge> edges;
  Vec3 centroid = Vec3::Zero();
  // Set when the hull was taken over jittered directions.
  bool jittered = false;

  std::size_t node_count() const { return node_coords.size(); }
  std::size_t edge_count() const { return edges.size(); }
};

struct SchullOptions {
  // Retry degenerate inputs with every point shifted by 1e-7 A along a
  // direction derived from its index.
  bool jitter = false;
};

constexpr double kJitterMagnitude = 1e-7;

/// Deterministic jitter offset for node `index`, of length kJitterMagnitude.
Vec3 jitter_offset(std::size_t index);

/// SCHull graph: points are projected onto the unit sphere around their
/// centroid and joined wherever their projections share a convex-hull edge.
/// Edge attribute tau is the angle at the centroid between the two projected
/// endpoints, atan2(|p_i x p_j|, p_i . p_j).
///
/// Throws kDegeneratePoint / kDuplicateDirection (or, with an impossible
/// hull, kDegenerateConfiguration) unless jitter is enabled. With jitter the
/// hull and tau use the shifted directions while lengths and node attributes
/// still come from the original coordinates.
GeometricGraph build_schull(const PointCloud &cloud,
                            const SchullOptions &options = {});

/// Every pair within cutoff (inclusive). Same schema as build_schull, tau is
/// always zero. Uses a uniform cell grid with cell size = cutoff.
GeometricGraph radius_graph(const PointCloud &cloud, double cutoff);

/// Number of radius-graph edges without materialising them.
std::size_t count_radius_edges(std::span<const Vec3> points, double cutoff);

}  // namespace sshg

#endif  // SSHG_SCHULL_H_
