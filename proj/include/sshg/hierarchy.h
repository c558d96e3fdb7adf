//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SSHG_HIERARCHY_H_
#define SSHG_HIERARCHY_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sshg/dssp.h"
#include "sshg/geometry.h"
#include "sshg/pdbio.h"
#include "sshg/schull.h"

namespace sshg {

/// SCHull graph over the CA atoms of one segment plus its local frame. The
/// frame is centred on the CA mean; its axes come from all backbone atoms of
/// the segment so that even one- and two-residue units get a well defined
/// orientation.
struct IntraGraph {
  Segment segment;
  GeometricGraph graph;
  Frame frame;
};

/// Attributes of one inter-unit edge. rel_orientation is g_i^T g_j with
/// i < j the edge endpoints.
struct InterEdgeFeature {
  Mat3 rel_orientation = Mat3::Identity();
  double length = 0;
  double tau = 0;
};

struct InterGraph {
  GeometricGraph graph;                  // one node per segment
  std::vector<InterEdgeFeature> features;  // parallel to graph.edges
};

struct HierarchicalGraph {
  std::string source_id;
  char chain_id = ' ';
  std::vector<IntraGraph> intra;
  InterGraph inter;
  int residue_count = 0;
  bool jittered = false;  // any level fell back to jittered directions
};

struct EdgeAudit {
  std::size_t inter = 0;
  std::size_t intra_sum = 0;
  std::size_t residues = 0;
  bool bound_ok = false;  // inter + intra_sum < 3 * residues

  std::size_t total() const { return inter + intra_sum; }
};

EdgeAudit total_edges(const HierarchicalGraph &h);

struct HierarchyOptions {
  SchullOptions schull;
  double hbond_threshold = kHBondThreshold;
};

/// Node feature codes. Intra nodes combine residue type and token; inter
/// nodes combine token and unit size.
std::int64_t intra_node_feature(std::string_view aa_type, SSToken token);
std::int64_t inter_node_feature(SSToken token, int unit_size);

/// Local frame of a segment: orientation from its backbone atoms, center at
/// the CA mean.
Frame segment_frame(const ProteinChain &chain, const Segment &seg);

std::vector<IntraGraph> build_intra(const ProteinChain &chain,
                                    std::span<const Segment> segments,
                                    const SchullOptions &options = {});

InterGraph build_inter(std::span<const IntraGraph> intra,
                       const SchullOptions &options = {});

/// Full pipeline: tokens, segments (cut at chain breaks), intra graphs,
/// inter graph.
HierarchicalGraph build_hierarchy(const ProteinChain &chain,
                                  const HierarchyOptions &options = {});

/// Same, with caller supplied tokens (one per residue).
HierarchicalGraph build_hierarchy(const ProteinChain &chain,
                                  std::span<const SSToken> tokens,
                                  const HierarchyOptions &options = {});

}  // namespace sshg

#endif  // SSHG_HIERARCHY_H_
