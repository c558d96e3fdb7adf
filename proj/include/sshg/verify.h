//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SSHG_VERIFY_H_
#define SSHG_VERIFY_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sshg/geometry.h"
#include "sshg/hierarchy.h"
#include "sshg/wlref.h"

namespace sshg {

/// Uniform random rotation (Shoemake's quaternion method), optionally
/// composed with a reflection on a fair coin, and a translation with each
/// component uniform in [-max_translation, max_translation].
RigidMotion random_rigid_motion(std::mt19937_64 &rng, double max_translation,
                                bool allow_reflection);

/// Motion as "q00 q01 ... q22 t0 t1 t2", every value printed with 17
/// significant digits so it can be fed back exactly.
std::string motion_to_string(const RigidMotion &m);

/// First difference between two hierarchies built from (possibly moved)
/// copies of one chain, or nullopt when they agree: same segments, same edge
/// index sets and node features, and every invariant scalar and relative
/// orientation within tol.
std::optional<std::string> compare_hierarchies(const HierarchicalGraph &a,
                                               const HierarchicalGraph &b,
                                               double tol);

struct VerifyOptions {
  int trials = 100;
  std::uint64_t seed = 1;
  double tol = 1e-6;
  double max_translation = 100.0;
  bool allow_reflection = true;
  // When nonempty these motions are checked instead of random ones.
  std::vector<RigidMotion> motions;
  WlRounds rounds;
  QuantConfig quant;
  HierarchyOptions build;
  // Runs on every rebuilt (moved) hierarchy before comparison. Used to
  // inject faults in negative controls.
  std::function<void(HierarchicalGraph &)> post_build_hook;
};

struct VerifyTrial {
  int index = 0;
  RigidMotion motion;
  Fingerprint fp;
  bool fingerprint_ok = false;
  bool attributes_ok = false;
  bool audit_ok = false;
  std::string detail;

  bool ok() const { return fingerprint_ok && attributes_ok && audit_ok; }
};

struct VerifyReport {
  Fingerprint reference;
  bool reference_audit_ok = false;
  std::vector<VerifyTrial> trials;

  int failures() const;
  bool ok() const { return reference_audit_ok && failures() == 0; }
};

VerifyReport verify_invariance(const ProteinChain &chain,
                               const VerifyOptions &options = {});

}  // namespace sshg

#endif  // SSHG_VERIFY_H_
