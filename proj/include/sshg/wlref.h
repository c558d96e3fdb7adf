//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SSHG_WLREF_H_
#define SSHG_WLREF_H_

#include <cstdint>
#include <string>
#include <vector>

#include "sshg/hash.h"
#include "sshg/hierarchy.h"
#include "sshg/pdbio.h"

namespace sshg {

using Fingerprint = Hash128;

struct QuantConfig {
  double scale = 1e6;
};

struct WlRounds {
  int intra = 3;  // T1
  int inter = 3;  // T2
};

/// x * scale rounded half to even. Throws kOverflow for non-finite results
/// or magnitudes above 2^62, kInvalidArgument for a non-positive scale.
std::int64_t quantize(double x, const QuantConfig &cfg = {});

/// A graph reduced to what colour refinement sees: initial node colours and,
/// per node, its neighbours with the quantized labels of the connecting edge
/// as seen from that node.
struct LabeledGraph {
  struct Arc {
    int to;
    std::vector<std::int64_t> label;
  };
  std::vector<Hash128> initial;
  std::vector<std::vector<Arc>> arcs;
};

/// Colour refinement. Element t holds the colours after t rounds (element 0
/// is the initial colouring). Each new colour hashes the old colour with the
/// sorted multiset of (neighbour colour, edge label) messages.
std::vector<std::vector<Hash128>> wl_refine(const LabeledGraph &g,
                                            int rounds);

/// Order independent readout of a colouring.
Hash128 readout(std::vector<Hash128> colors);

LabeledGraph intra_labeled_graph(const IntraGraph &g,
                                 const QuantConfig &cfg = {});
Hash128 intra_code(const IntraGraph &g, int rounds,
                   const QuantConfig &cfg = {});

LabeledGraph inter_labeled_graph(const HierarchicalGraph &h, int intra_rounds,
                                 const QuantConfig &cfg = {});
Fingerprint fingerprint(const HierarchicalGraph &h, WlRounds rounds = {},
                        const QuantConfig &cfg = {});

/// Human readable dump of every quantized value that feeds the fingerprint,
/// for logging collisions.
std::string fingerprint_preimage(const HierarchicalGraph &h,
                                 WlRounds rounds = {},
                                 const QuantConfig &cfg = {});

struct DistinguishResult {
  bool same = false;
  Fingerprint a;
  Fingerprint b;
};

DistinguishResult distinguish(const ProteinChain &a, const ProteinChain &b,
                              const QuantConfig &cfg = {},
                              WlRounds rounds = {},
                              const HierarchyOptions &options = {});

}  // namespace sshg

#endif  // SSHG_WLREF_H_
