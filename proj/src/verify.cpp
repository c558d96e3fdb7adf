//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "sshg/verify.h"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "sshg/pdbio.h"

namespace sshg {
namespace {

// [0, 1) from the top 53 bits, identical on every platform.
double unit_uniform(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

bool close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol;
}

std::optional<std::string> compare_graphs(const GeometricGraph &a,
                                          const GeometricGraph &b, double tol,
                                          const std::string &where) {
  if (a.node_count() != b.node_count())
    return where + ": node count differs";
  if (a.edge_count() != b.edge_count())
    return where + ": edge count " + std::to_string(a.edge_count()) + " vs "
           + std::to_string(b.edge_count());
  for (std::size_t v = 0; v < a.node_count(); ++v) {
    if (a.node_features[v] != b.node_features[v])
      return where + ": node feature " + std::to_string(v);
    if (!close(a.node_attrs[v], b.node_attrs[v], tol))
      return where + ": node attr " + std::to_string(v) + " "
             + fmt17(a.node_attrs[v]) + " vs " + fmt17(b.node_attrs[v]);
  }
  for (std::size_t k = 0; k < a.edge_count(); ++k) {
    const GraphEdge &x = a.edges[k], &y = b.edges[k];
    if (x.i != y.i || x.j != y.j)
      return where + ": edge " + std::to_string(k) + " endpoints differ";
    if (!close(x.length, y.length, tol))
      return where + ": edge " + std::to_string(k) + " length "
             + fmt17(x.length) + " vs " + fmt17(y.length);
    if (!close(x.tau, y.tau, tol))
      return where + ": edge " + std::to_string(k) + " tau " + fmt17(x.tau)
             + " vs " + fmt17(y.tau);
  }
  return std::nullopt;
}

}  // namespace

RigidMotion random_rigid_motion(std::mt19937_64 &rng, double max_translation,
                                bool allow_reflection) {
  const double u1 = unit_uniform(rng);
  const double u2 = unit_uniform(rng);
  const double u3 = unit_uniform(rng);
  constexpr double kTwoPi = 2 * std::numbers::pi;
  const double a = std::sqrt(1 - u1), b = std::sqrt(u1);
  Eigen::Quaterniond q(b * std::cos(kTwoPi * u3), a * std::sin(kTwoPi * u2),
                       a * std::cos(kTwoPi * u2), b * std::sin(kTwoPi * u3));
  Mat3 rot = q.normalized().toRotationMatrix();

  const bool reflect = allow_reflection && (rng() >> 63) != 0;
  if (reflect)
    rot.col(0) = -rot.col(0);

  Vec3 t;
  for (int k = 0; k < 3; ++k)
    t[k] = (2 * unit_uniform(rng) - 1) * max_translation;
  return RigidMotion(rot, t);
}

std::string motion_to_string(const RigidMotion &m) {
  std::string out;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      out += fmt17(m.rotation()(r, c));
      out += ' ';
    }
  }
  for (int k = 0; k < 3; ++k) {
    out += fmt17(m.translation()[k]);
    if (k < 2)
      out += ' ';
  }
  return out;
}

std::optional<std::string> compare_hierarchies(const HierarchicalGraph &a,
                                               const HierarchicalGraph &b,
                                               double tol) {
  if (a.residue_count != b.residue_count)
    return std::string("residue count differs");
  if (a.intra.size() != b.intra.size())
    return "unit count " + std::to_string(a.intra.size()) + " vs "
           + std::to_string(b.intra.size());
  for (std::size_t s = 0; s < a.intra.size(); ++s) {
    if (!(a.intra[s].segment == b.intra[s].segment))
      return "segment " + std::to_string(s) + " differs";
    if (auto d = compare_graphs(a.intra[s].graph, b.intra[s].graph, tol,
                                "unit " + std::to_string(s)))
      return d;
  }
  if (auto d = compare_graphs(a.inter.graph, b.inter.graph, tol, "inter"))
    return d;
  if (a.inter.features.size() != b.inter.features.size())
    return std::string("inter feature count differs");
  for (std::size_t k = 0; k < a.inter.features.size(); ++k) {
    const Mat3 diff = a.inter.features[k].rel_orientation
                      - b.inter.features[k].rel_orientation;
    if (diff.cwiseAbs().maxCoeff() > tol)
      return "inter edge " + std::to_string(k)
             + " relative orientation differs by "
             + fmt17(diff.cwiseAbs().maxCoeff());
  }
  return std::nullopt;
}

int VerifyReport::failures() const {
  int n = 0;
  for (const VerifyTrial &t: trials)
    n += t.ok() ? 0 : 1;
  return n;
}

VerifyReport verify_invariance(const ProteinChain &chain,
                               const VerifyOptions &options) {
  VerifyReport report;
  const HierarchicalGraph reference = build_hierarchy(chain, options.build);
  report.reference = fingerprint(reference, options.rounds, options.quant);
  report.reference_audit_ok = total_edges(reference).bound_ok;

  std::mt19937_64 rng(options.seed);
  const int count = options.motions.empty()
                        ? options.trials
                        : static_cast<int>(options.motions.size());
  for (int t = 0; t < count; ++t) {
    VerifyTrial trial;
    trial.index = t;
    trial.motion = options.motions.empty()
                       ? random_rigid_motion(rng, options.max_translation,
                                             options.allow_reflection)
                       : options.motions[t];
    try {
      HierarchicalGraph moved =
          build_hierarchy(apply_rigid(trial.motion, chain), options.build);
      if (options.post_build_hook)
        options.post_build_hook(moved);
      trial.fp = fingerprint(moved, options.rounds, options.quant);
      trial.fingerprint_ok = trial.fp == report.reference;
      trial.audit_ok = total_edges(moved).bound_ok;
      auto diff = compare_hierarchies(reference, moved, options.tol);
      trial.attributes_ok = !diff;
      if (diff)
        trial.detail = *diff;
      else if (!trial.fingerprint_ok)
        trial.detail = "fingerprint differs";
      else if (!trial.audit_ok)
        trial.detail = "edge bound violated";
    } catch (const std::exception &e) {
      trial.detail = e.what();
    }
    report.trials.push_back(std::move(trial));
  }
  return report;
}

}  // namespace sshg
