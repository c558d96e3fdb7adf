//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SSHG_HULL_H_
#define SSHG_HULL_H_

#include <compare>
#include <span>
#include <vector>

#include "sshg/geometry.h"

namespace sshg {

/// Undirected edge between point indices, stored with i < j.
struct IndexPair {
  int i;
  int j;

  auto operator<=>(const IndexPair &) const = default;
};

/// Edge set of the convex hull of points lying on the unit sphere.
///
/// One point gives no edges and two points give the single edge {0, 1}. For
/// three or more points a QuickHull is built with orientation predicates
/// tolerant to 1e-9. Every input point ends up as a hull vertex: a point
/// within tolerance of a finished face is inserted by splitting that face,
/// which keeps the edge graph a triangulation (connected, at most 3n - 6
/// edges). When all points share a plane, the 2-D hull in that plane is
/// used instead, with any interior points fanned from the lexicographically
/// smallest one.
///
/// Throws kDegenerateConfiguration if the points are collinear (only possible
/// with repeated directions) and kInvalidArgument for an empty input.
///
/// Edges are returned sorted and without duplicates.
std::vector<IndexPair> convex_hull_sphere(std::span<const Vec3> points);

}  // namespace sshg

#endif  // SSHG_HULL_H_
