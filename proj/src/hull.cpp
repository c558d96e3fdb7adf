//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "sshg/hull.h"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "sshg/error.h"

namespace sshg {
namespace {

constexpr double kEps = kGeomEpsilon;

void push_edge(std::vector<IndexPair> &edges, int a, int b) {
  edges.push_back({ std::min(a, b), std::max(a, b) });
}

std::vector<IndexPair> finish(std::vector<IndexPair> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::vector<IndexPair> planar_hull(std::span<const Vec3> pts, int i0, int i1,
                                   const Vec3 &normal) {
  const Vec3 &origin = pts[i0];
  Vec3 u = (pts[i1] - origin).normalized();
  Vec3 w = normal.cross(u).normalized();

  const int n = static_cast<int>(pts.size());
  std::vector<std::array<double, 2>> q(n);
  for (int i = 0; i < n; ++i) {
    Vec3 d = pts[i] - origin;
    q[i] = { d.dot(u), d.dot(w) };
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return std::tie(q[a][0], q[a][1], a)
                                       < std::tie(q[b][0], q[b][1], b); });

  auto cross = [&](int o, int a, int b) {
    return (q[a][0] - q[o][0]) * (q[b][1] - q[o][1])
           - (q[a][1] - q[o][1]) * (q[b][0] - q[o][0]);
  };

  // Andrew's monotone chain; near-collinear boundary points count as
  // interior.
  std::vector<int> hull(2 * n);
  int k = 0;
  for (int idx: order) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], idx) <= kEps)
      --k;
    hull[k++] = idx;
  }
  for (int s = n - 2, lower = k + 1; s >= 0; --s) {
    int idx = order[s];
    while (k >= lower && cross(hull[k - 2], hull[k - 1], idx) <= kEps)
      --k;
    hull[k++] = idx;
  }
  hull.resize(std::max(k - 1, 0));

  if (hull.size() < 3) {
    throw Error(ErrorKind::kDegenerateConfiguration,
                "projected points are collinear");
  }

  std::vector<IndexPair> edges;
  for (std::size_t s = 0; s < hull.size(); ++s)
    push_edge(edges, hull[s], hull[(s + 1) % hull.size()]);

  std::vector<bool> on_hull(n, false);
  for (int h: hull)
    on_hull[h] = true;
  std::vector<int> interior;
  for (int i = 0; i < n; ++i) {
    if (!on_hull[i])
      interior.push_back(i);
  }
  if (!interior.empty()) {
    int hub = *std::min_element(interior.begin(), interior.end(),
                                [&](int a, int b) {
                                  return std::tie(pts[a].x(), pts[a].y(),
                                                  pts[a].z(), a)
                                         < std::tie(pts[b].x(), pts[b].y(),
                                                    pts[b].z(), b);
                                });
    for (int h: hull)
      push_edge(edges, hub, h);
    for (int i: interior) {
      if (i != hub)
        push_edge(edges, hub, i);
    }
  }
  return finish(std::move(edges));
}

class QuickHull {
public:
  explicit QuickHull(std::span<const Vec3> pts)
      : pts_(pts), n_(static_cast<int>(pts.size())), is_vertex_(n_, false),
        start_of_(n_, -1), end_of_(n_, -1) { }

  std::vector<IndexPair> run() {
    if (!build_simplex())
      return planar_hull(pts_, i0_, i1_, plane_normal_);

    for (std::size_t f = 0; f < faces_.size(); ++f) {
      if (faces_[f].alive && !faces_[f].outside.empty())
        add_point(static_cast<int>(f));
    }
    insert_leftovers();

    std::vector<IndexPair> edges;
    for (const Face &f: faces_) {
      if (!f.alive)
        continue;
      for (int k = 0; k < 3; ++k)
        push_edge(edges, f.v[k], f.v[(k + 1) % 3]);
    }
    return finish(std::move(edges));
  }

private:
  struct Face {
    std::array<int, 3> v;
    // adj[k] is the face across the edge v[k] -> v[k + 1].
    std::array<int, 3> adj { -1, -1, -1 };
    Vec3 normal;
    double offset;
    std::vector<int> outside;
    bool alive = true;
    unsigned visit = 0;
  };

  double distance(const Face &f, int p) const {
    return f.normal.dot(pts_[p]) - f.offset;
  }

  int add_face(int a, int b, int c) {
    Face f;
    f.v = { a, b, c };
    Vec3 nrm = (pts_[b] - pts_[a]).cross(pts_[c] - pts_[a]);
    double len = nrm.norm();
    f.normal = len > 0 ? Vec3(nrm / len) : Vec3::Zero();
    f.offset = f.normal.dot(pts_[a]);
    faces_.push_back(std::move(f));
    return static_cast<int>(faces_.size()) - 1;
  }

  bool build_simplex() {
    std::array<int, 6> extreme {};
    extreme.fill(0);
    for (int i = 1; i < n_; ++i) {
      for (int axis = 0; axis < 3; ++axis) {
        if (pts_[i][axis] < pts_[extreme[2 * axis]][axis])
          extreme[2 * axis] = i;
        if (pts_[i][axis] > pts_[extreme[2 * axis + 1]][axis])
          extreme[2 * axis + 1] = i;
      }
    }
    double best = -1;
    for (int a = 0; a < 6; ++a) {
      for (int b = a + 1; b < 6; ++b) {
        double d = (pts_[extreme[a]] - pts_[extreme[b]]).norm();
        if (d > best) {
          best = d;
          i0_ = std::min(extreme[a], extreme[b]);
          i1_ = std::max(extreme[a], extreme[b]);
        }
      }
    }
    if (best <= kEps)
      throw Error(ErrorKind::kDegenerateConfiguration, "all points coincide");

    Vec3 dir = (pts_[i1_] - pts_[i0_]).normalized();
    best = -1;
    int i2 = -1;
    for (int i = 0; i < n_; ++i) {
      double d = (pts_[i] - pts_[i0_]).cross(dir).norm();
      if (d > best) {
        best = d;
        i2 = i;
      }
    }
    if (best <= kEps) {
      throw Error(ErrorKind::kDegenerateConfiguration,
                  "projected points are collinear");
    }

    plane_normal_ =
        (pts_[i1_] - pts_[i0_]).cross(pts_[i2] - pts_[i0_]).normalized();
    best = -1;
    int i3 = -1;
    for (int i = 0; i < n_; ++i) {
      double d = std::abs(plane_normal_.dot(pts_[i] - pts_[i0_]));
      if (d > best) {
        best = d;
        i3 = i;
      }
    }
    if (best <= kEps)
      return false;

    int a = i0_, b = i1_, c = i2;
    if (plane_normal_.dot(pts_[i3] - pts_[i0_]) > 0)
      std::swap(b, c);
    // Base (a, b, c) faces away from i3; each side face holds one reversed
    // base edge.
    add_face(a, b, c);
    add_face(b, a, i3);
    add_face(c, b, i3);
    add_face(a, c, i3);

    std::map<std::pair<int, int>, int> directed;
    for (int f = 0; f < 4; ++f) {
      for (int k = 0; k < 3; ++k)
        directed[{ faces_[f].v[k], faces_[f].v[(k + 1) % 3] }] = f;
    }
    for (int f = 0; f < 4; ++f) {
      for (int k = 0; k < 3; ++k)
        faces_[f].adj[k] =
            directed.at({ faces_[f].v[(k + 1) % 3], faces_[f].v[k] });
    }

    for (int v: { a, b, c, i3 })
      is_vertex_[v] = true;
    for (int p = 0; p < n_; ++p) {
      if (!is_vertex_[p])
        assign(p, 0, 4);
    }
    return true;
  }

  // Puts p into the outside set of the face in [first, last) it is
  // furthest above, if any.
  void assign(int p, std::size_t first, std::size_t last) {
    int best = -1;
    double best_d = kEps;
    for (std::size_t f = first; f < last; ++f) {
      if (!faces_[f].alive)
        continue;
      double d = distance(faces_[f], p);
      if (d > best_d) {
        best_d = d;
        best = static_cast<int>(f);
      }
    }
    if (best >= 0)
      faces_[best].outside.push_back(p);
  }

  void add_point(int face) {
    const std::vector<int> &cand = faces_[face].outside;
    int apex = cand.front();
    double apex_d = distance(faces_[face], apex);
    for (int p: cand) {
      double d = distance(faces_[face], p);
      if (d > apex_d || (d == apex_d && p < apex)) {
        apex = p;
        apex_d = d;
      }
    }

    // Flood the visible region from the seed face.
    ++epoch_;
    std::vector<int> visible { face };
    faces_[face].visit = epoch_;
    for (std::size_t s = 0; s < visible.size(); ++s) {
      for (int nb: faces_[visible[s]].adj) {
        Face &g = faces_[nb];
        if (g.visit == epoch_)
          continue;
        if (distance(g, apex) > kEps) {
          g.visit = epoch_;
          visible.push_back(nb);
        }
      }
    }

    struct HorizonEdge {
      int a, b, outer;
    };
    std::vector<HorizonEdge> horizon;
    for (int f: visible) {
      for (int k = 0; k < 3; ++k) {
        int nb = faces_[f].adj[k];
        if (faces_[nb].visit != epoch_)
          horizon.push_back({ faces_[f].v[k], faces_[f].v[(k + 1) % 3], nb });
      }
    }

    std::vector<int> orphans;
    for (int f: visible) {
      faces_[f].alive = false;
      for (int p: faces_[f].outside) {
        if (p != apex)
          orphans.push_back(p);
      }
      faces_[f].outside.clear();
      faces_[f].outside.shrink_to_fit();
    }

    const std::size_t first_new = faces_.size();
    for (const HorizonEdge &e: horizon) {
      if (start_of_[e.a] != -1 || end_of_[e.b] != -1) {
        throw Error(ErrorKind::kDegenerateConfiguration,
                    "non-manifold horizon while adding point "
                        + std::to_string(apex));
      }
      int nf = add_face(e.a, e.b, apex);
      faces_[nf].adj[0] = e.outer;
      Face &outer = faces_[e.outer];
      for (int k = 0; k < 3; ++k) {
        if (outer.v[k] == e.b && outer.v[(k + 1) % 3] == e.a)
          outer.adj[k] = nf;
      }
      start_of_[e.a] = nf;
      end_of_[e.b] = nf;
    }
    for (std::size_t f = first_new; f < faces_.size(); ++f) {
      Face &nf = faces_[f];
      nf.adj[1] = start_of_[nf.v[1]];
      nf.adj[2] = end_of_[nf.v[0]];
      if (nf.adj[1] < 0 || nf.adj[2] < 0) {
        throw Error(ErrorKind::kDegenerateConfiguration,
                    "open horizon while adding point " + std::to_string(apex));
      }
    }
    for (const HorizonEdge &e: horizon) {
      start_of_[e.a] = -1;
      end_of_[e.b] = -1;
    }

    is_vertex_[apex] = true;
    std::sort(orphans.begin(), orphans.end());
    for (int p: orphans)
      assign(p, first_new, faces_.size());
  }

  void insert_leftovers() {
    for (int p = 0; p < n_; ++p) {
      if (is_vertex_[p])
        continue;
      int best = -1;
      double best_d = 0;
      for (std::size_t f = 0; f < faces_.size(); ++f) {
        if (!faces_[f].alive)
          continue;
        double d = distance(faces_[f], p);
        if (best < 0 || d > best_d) {
          best = static_cast<int>(f);
          best_d = d;
        }
      }
      std::array<int, 3> v = faces_[best].v;
      faces_[best].alive = false;
      add_face(v[0], v[1], p);
      add_face(v[1], v[2], p);
      add_face(v[2], v[0], p);
      is_vertex_[p] = true;
    }
  }

  std::span<const Vec3> pts_;
  int n_;
  std::vector<Face> faces_;
  std::vector<bool> is_vertex_;
  std::vector<int> start_of_, end_of_;
  unsigned epoch_ = 0;
  int i0_ = 0, i1_ = 0;
  Vec3 plane_normal_ = Vec3::Zero();
};

}  // namespace

std::vector<IndexPair> convex_hull_sphere(std::span<const Vec3> points) {
  if (points.empty())
    throw Error(ErrorKind::kInvalidArgument, "hull of an empty point set");
  if (points.size() == 1)
    return {};
  if (points.size() == 2)
    return { { 0, 1 } };
  return QuickHull(points).run();
}

}  // namespace sshg
