//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SSHG_GEOMETRY_H_
#define SSHG_GEOMETRY_H_

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace sshg {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Tolerance shared by coincidence checks and hull orientation predicates.
constexpr double kGeomEpsilon = 1e-9;

/// An element of E(3): x -> rotation * x + translation. The rotation part may
/// be improper (det = -1).
class RigidMotion {
public:
  RigidMotion() = default;

  /// Throws kInvalidArgument unless q is orthogonal within 1e-9.
  RigidMotion(const Mat3 &q, const Vec3 &t);

  const Mat3 &rotation() const { return q_; }
  const Vec3 &translation() const { return t_; }

  Vec3 apply(const Vec3 &x) const { return q_ * x + t_; }

  bool is_reflection() const { return q_.determinant() < 0; }

private:
  Mat3 q_ = Mat3::Identity();
  Vec3 t_ = Vec3::Zero();
};

/// Orientation (orthogonal matrix, columns are the axes) plus center.
struct Frame {
  Mat3 orientation = Mat3::Identity();
  Vec3 center = Vec3::Zero();
};

/// Ordered, nonempty set of distinct points with opaque integer features.
class PointCloud {
public:
  /// Throws kInvalidArgument for empty input, non-finite coordinates or a
  /// feature list of the wrong length; kCoincidentPoints if two points lie
  /// within 1e-9 of each other. Missing features default to zero.
  explicit PointCloud(std::vector<Vec3> points,
                      std::vector<std::int64_t> features = {});

  std::span<const Vec3> points() const { return points_; }
  std::span<const std::int64_t> features() const { return features_; }

  std::size_t size() const { return points_.size(); }
  const Vec3 &operator[](std::size_t i) const { return points_[i]; }

private:
  std::vector<Vec3> points_;
  std::vector<std::int64_t> features_;
};

/// Returns the first pair (i < j) of points within tol of each other, or
/// {-1, -1}. Sort-and-sweep on x, so O(n log n) for spread-out inputs.
std::pair<int, int> find_coincident_pair(std::span<const Vec3> points,
                                         double tol);

Vec3 centroid(std::span<const Vec3> points);
Vec3 centroid(const PointCloud &cloud);

/// (x - center) / |x - center| for every point. Throws kDegeneratePoint when a
/// point is within 1e-9 of center and kDuplicateDirection when two points
/// project to the same location.
PointCloud project_to_sphere(const PointCloud &cloud, const Vec3 &center);

PointCloud apply_rigid(const RigidMotion &m, const PointCloud &cloud);

/// Equivariant frame of a point cloud. The center is the centroid and the
/// axes are the eigenvectors of the centered covariance, ordered by
/// descending eigenvalue. Each axis points towards the positive third central
/// moment along it, so the map commutes with rotations and reflections alike
/// and the orientation may be improper. Degenerate spectra and vanishing
/// moments fall back to point-based tie breaking, which is only
/// relaxed-equivariant on symmetric inputs. A single point gets the identity.
Frame compute_frame(std::span<const Vec3> points);
Frame compute_frame(const PointCloud &cloud);

/// Least-squares orthogonal alignment of b onto a (row i of a pairs with row
/// i of b). Reflections are allowed. Returns the motion g with g(b_i) ~ a_i.
RigidMotion kabsch(std::span<const Vec3> a, std::span<const Vec3> b,
                   bool allow_reflection = true);

/// True iff some bijection and some rigid motion (reflections included) map
/// cloudB onto cloudA point-by-point within tol with matching features.
bool congruent(const PointCloud &a, const PointCloud &b, double tol);

}  // namespace sshg

#endif  // SSHG_GEOMETRY_H_
