//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "sshg/geometry.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sshg/error.h"

namespace sshg {

RigidMotion::RigidMotion(const Mat3 &q, const Vec3 &t): q_(q), t_(t) {
  if (!q.allFinite() || !t.allFinite())
    throw Error(ErrorKind::kInvalidArgument, "non-finite rigid motion");
  double dev = (q.transpose() * q - Mat3::Identity()).cwiseAbs().maxCoeff();
  if (dev > 1e-9)
    throw Error(ErrorKind::kInvalidArgument,
                "rotation part is not orthogonal (deviation "
                    + std::to_string(dev) + ")");
}

std::pair<int, int> find_coincident_pair(std::span<const Vec3> points,
                                         double tol) {
  std::vector<int> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return points[a].x() < points[b].x()
           || (points[a].x() == points[b].x() && a < b);
  });

  for (std::size_t s = 0; s < order.size(); ++s) {
    const Vec3 &p = points[order[s]];
    for (std::size_t t = s + 1; t < order.size(); ++t) {
      const Vec3 &q = points[order[t]];
      if (q.x() - p.x() > tol)
        break;
      if ((p - q).norm() <= tol)
        return std::minmax(order[s], order[t]);
    }
  }
  return { -1, -1 };
}

PointCloud::PointCloud(std::vector<Vec3> points,
                       std::vector<std::int64_t> features)
    : points_(std::move(points)), features_(std::move(features)) {
  if (points_.empty())
    throw Error(ErrorKind::kInvalidArgument, "point cloud is empty");
  if (features_.empty())
    features_.assign(points_.size(), 0);
  if (features_.size() != points_.size())
    throw Error(ErrorKind::kInvalidArgument,
                "feature count does not match point count");
  for (const Vec3 &p: points_) {
    if (!p.allFinite())
      throw Error(ErrorKind::kInvalidArgument, "non-finite coordinate");
  }

  auto [i, j] = find_coincident_pair(points_, kGeomEpsilon);
  if (i >= 0) {
    throw Error(ErrorKind::kCoincidentPoints,
                "points " + std::to_string(i) + " and " + std::to_string(j)
                    + " coincide");
  }
}

Vec3 centroid(std::span<const Vec3> points) {
  Vec3 sum = Vec3::Zero();
  for (const Vec3 &p: points)
    sum += p;
  return sum / static_cast<double>(points.size());
}

Vec3 centroid(const PointCloud &cloud) {
  return centroid(cloud.points());
}

PointCloud project_to_sphere(const PointCloud &cloud, const Vec3 &center) {
  std::vector<Vec3> projected;
  projected.reserve(cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    Vec3 d = cloud[i] - center;
    double r = d.norm();
    if (r <= kGeomEpsilon) {
      throw Error(ErrorKind::kDegeneratePoint,
                  "point " + std::to_string(i) + " coincides with the center");
    }
    projected.push_back(d / r);
  }

  auto [i, j] = find_coincident_pair(projected, kGeomEpsilon);
  if (i >= 0) {
    throw Error(ErrorKind::kDuplicateDirection,
                "points " + std::to_string(i) + " and " + std::to_string(j)
                    + " project to the same direction");
  }

  std::vector<std::int64_t> features(cloud.features().begin(),
                                     cloud.features().end());
  return PointCloud(std::move(projected), std::move(features));
}

PointCloud apply_rigid(const RigidMotion &m, const PointCloud &cloud) {
  std::vector<Vec3> moved;
  moved.reserve(cloud.size());
  for (const Vec3 &p: cloud.points())
    moved.push_back(m.apply(p));
  std::vector<std::int64_t> features(cloud.features().begin(),
                                     cloud.features().end());
  return PointCloud(std::move(moved), std::move(features));
}

// ---------------------------------------------------------------------------
// Frames
// ---------------------------------------------------------------------------

namespace {

constexpr double kFrameTieTol = 1e-9;
constexpr double kFrameQuantum = 1e6;

std::vector<std::int64_t> sorted_projection(std::span<const Vec3> centered,
                                            const Vec3 &axis, double sign) {
  std::vector<std::int64_t> q;
  q.reserve(centered.size());
  for (const Vec3 &d: centered)
    q.push_back(std::llround(sign * d.dot(axis) * kFrameQuantum));
  std::sort(q.begin(), q.end(), std::greater<>());
  return q;
}

// Returns +1/-1 when the sign of the axis is determined by the point set, 0
// when the set is symmetric under reflection along the axis.
int orient_axis(std::span<const Vec3> centered, const Vec3 &axis) {
  double m3 = 0;
  for (const Vec3 &d: centered) {
    double s = d.dot(axis);
    m3 += s * s * s;
  }
  m3 /= static_cast<double>(centered.size());
  if (std::abs(m3) >= kFrameTieTol)
    return m3 > 0 ? 1 : -1;

  auto plus = sorted_projection(centered, axis, 1.0);
  auto minus = sorted_projection(centered, axis, -1.0);
  if (plus == minus)
    return 0;
  return plus > minus ? 1 : -1;
}

// Picks a direction inside the plane spanned by orthonormal b1, b2 from the
// point with the largest in-plane component. Returns false if every point
// projects to the origin of the plane.
bool pick_in_plane(std::span<const Vec3> centered, Vec3 &b1, Vec3 &b2) {
  int best = -1;
  double best_norm = kFrameTieTol;
  for (std::size_t i = 0; i < centered.size(); ++i) {
    Vec3 w = centered[i].dot(b1) * b1 + centered[i].dot(b2) * b2;
    double r = w.norm();
    if (r > best_norm * (1 + 1e-12)) {
      best = static_cast<int>(i);
      best_norm = r;
    }
  }
  if (best < 0)
    return false;

  const Vec3 &d = centered[best];
  Vec3 first = (d.dot(b1) * b1 + d.dot(b2) * b2).normalized();
  Vec3 second = (b2 - b2.dot(first) * first);
  if (second.norm() < 1e-6)
    second = b1 - b1.dot(first) * first;
  b1 = first;
  b2 = second.normalized();
  return true;
}

}  // namespace

Frame compute_frame(std::span<const Vec3> points) {
  Frame frame;
  frame.center = centroid(points);
  if (points.size() == 1)
    return frame;

  std::vector<Vec3> centered;
  centered.reserve(points.size());
  Mat3 cov = Mat3::Zero();
  for (const Vec3 &p: points) {
    Vec3 d = p - frame.center;
    centered.push_back(d);
    cov.noalias() += d * d.transpose();
  }
  cov /= static_cast<double>(points.size());

  Eigen::SelfAdjointEigenSolver<Mat3> solver(cov);
  const Vec3 &ascending = solver.eigenvalues();
  std::array<double, 3> lambda { ascending[2], ascending[1], ascending[0] };
  std::array<Vec3, 3> axis { solver.eigenvectors().col(2),
                             solver.eigenvectors().col(1),
                             solver.eigenvectors().col(0) };

  // Axes already oriented by a concrete point need no moment test.
  std::array<bool, 3> fixed { false, false, false };

  bool tie01 = lambda[0] - lambda[1] < kFrameTieTol;
  bool tie12 = lambda[1] - lambda[2] < kFrameTieTol;
  if (tie01 && tie12) {
    int far = 0;
    for (std::size_t i = 1; i < centered.size(); ++i) {
      if (centered[i].norm() > centered[far].norm() * (1 + 1e-12))
        far = static_cast<int>(i);
    }
    if (centered[far].norm() > kFrameTieTol) {
      axis[0] = centered[far].normalized();
      fixed[0] = true;
      Vec3 any = std::abs(axis[0].x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
      axis[1] = axis[0].cross(any).normalized();
      axis[2] = axis[0].cross(axis[1]);
      fixed[1] = pick_in_plane(centered, axis[1], axis[2]);
    }
  } else if (tie01) {
    fixed[0] = pick_in_plane(centered, axis[0], axis[1]);
  } else if (tie12) {
    fixed[1] = pick_in_plane(centered, axis[1], axis[2]);
  }

  std::array<bool, 3> decided = fixed;
  for (int k = 0; k < 3; ++k) {
    if (fixed[k])
      continue;
    int s = orient_axis(centered, axis[k]);
    if (s < 0)
      axis[k] = -axis[k];
    decided[k] = s != 0;
  }
  // A reflection-symmetric cloud cannot fix its last axis; use the
  // right-handed completion.
  if (!decided[2])
    axis[2] = axis[0].cross(axis[1]);

  for (int k = 0; k < 3; ++k)
    frame.orientation.col(k) = axis[k];
  return frame;
}

Frame compute_frame(const PointCloud &cloud) {
  return compute_frame(cloud.points());
}

// ---------------------------------------------------------------------------
// Congruence oracle
// ---------------------------------------------------------------------------

RigidMotion kabsch(std::span<const Vec3> a, std::span<const Vec3> b,
                   bool allow_reflection) {
  Vec3 ca = centroid(a), cb = centroid(b);
  Mat3 h = Mat3::Zero();
  for (std::size_t i = 0; i < a.size(); ++i)
    h.noalias() += (b[i] - cb) * (a[i] - ca).transpose();

  Eigen::JacobiSVD<Mat3> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 r = svd.matrixV() * svd.matrixU().transpose();
  if (!allow_reflection && r.determinant() < 0) {
    Mat3 fix = Mat3::Identity();
    fix(2, 2) = -1;
    r = svd.matrixV() * fix * svd.matrixU().transpose();
  }
  // Re-orthogonalize so the motion passes the 1e-9 orthogonality check.
  Eigen::JacobiSVD<Mat3> clean(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
  r = clean.matrixU() * clean.matrixV().transpose();
  return RigidMotion(r, ca - r * cb);
}

namespace {

double max_deviation(std::span<const Vec3> a, std::span<const Vec3> b,
                     const RigidMotion &m) {
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, (m.apply(b[i]) - a[i]).norm());
  return worst;
}

bool aligns(const PointCloud &a, const PointCloud &b,
            std::span<const int> perm, double tol) {
  std::vector<Vec3> pb;
  pb.reserve(perm.size());
  for (int j: perm)
    pb.push_back(b[j]);
  RigidMotion m = kabsch(a.points(), pb);
  return max_deviation(a.points(), pb, m) <= tol;
}

class CorrespondenceSearch {
public:
  CorrespondenceSearch(const PointCloud &a, const PointCloud &b, double tol)
      : a_(a), b_(b), tol_(tol), n_(a.size()), used_(n_, false), perm_(n_) {
    da_ = distances(a);
    db_ = distances(b);
    signature_a_ = signatures(da_);
    signature_b_ = signatures(db_);
  }

  bool run() { return extend(0); }

private:
  static std::vector<double> distances(const PointCloud &c) {
    std::size_t n = c.size();
    std::vector<double> d(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i * n + j] = (c[i] - c[j]).norm();
    return d;
  }

  std::vector<std::vector<double>> signatures(const std::vector<double> &d) {
    std::vector<std::vector<double>> sig(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      sig[i].assign(d.begin() + i * n_, d.begin() + (i + 1) * n_);
      std::sort(sig[i].begin(), sig[i].end());
    }
    return sig;
  }

  bool compatible(std::size_t i, std::size_t j) const {
    if (a_.features()[i] != b_.features()[j])
      return false;
    for (std::size_t k = 0; k < n_; ++k) {
      if (std::abs(signature_a_[i][k] - signature_b_[j][k]) > 2 * tol_)
        return false;
    }
    for (std::size_t k = 0; k < i; ++k) {
      if (std::abs(da_[i * n_ + k] - db_[j * n_ + perm_[k]]) > 2 * tol_)
        return false;
    }
    return true;
  }

  bool extend(std::size_t i) {
    if (i == n_)
      return aligns(a_, b_, perm_, tol_);
    for (std::size_t j = 0; j < n_; ++j) {
      if (used_[j] || !compatible(i, j))
        continue;
      used_[j] = true;
      perm_[i] = static_cast<int>(j);
      if (extend(i + 1))
        return true;
      used_[j] = false;
    }
    return false;
  }

  const PointCloud &a_, &b_;
  double tol_;
  std::size_t n_;
  std::vector<bool> used_;
  std::vector<int> perm_;
  std::vector<double> da_, db_;
  std::vector<std::vector<double>> signature_a_, signature_b_;
};

}  // namespace

bool congruent(const PointCloud &a, const PointCloud &b, double tol) {
  if (!(tol > 0))
    throw Error(ErrorKind::kInvalidArgument, "tolerance must be positive");
  const std::size_t n = a.size();
  if (b.size() != n)
    return false;

  std::vector<std::int64_t> fa(a.features().begin(), a.features().end());
  std::vector<std::int64_t> fb(b.features().begin(), b.features().end());
  std::sort(fa.begin(), fa.end());
  std::sort(fb.begin(), fb.end());
  if (fa != fb)
    return false;
  if (n == 1)
    return true;

  std::vector<double> da, db;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      da.push_back((a[i] - a[j]).norm());
      db.push_back((b[i] - b[j]).norm());
    }
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  for (std::size_t k = 0; k < da.size(); ++k) {
    if (std::abs(da[k] - db[k]) > 2 * tol)
      return false;
  }

  if (n <= 8) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool features_match = true;
      for (std::size_t i = 0; i < n && features_match; ++i)
        features_match = a.features()[i] == b.features()[perm[i]];
      if (features_match && aligns(a, b, perm, tol))
        return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }

  return CorrespondenceSearch(a, b, tol).run();
}

}  // namespace sshg
