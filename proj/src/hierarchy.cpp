//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "sshg/hierarchy.h"

#include <string>

#include "sshg/error.h"

namespace sshg {

EdgeAudit total_edges(const HierarchicalGraph &h) {
  EdgeAudit audit;
  audit.inter = h.inter.graph.edge_count();
  for (const IntraGraph &g: h.intra)
    audit.intra_sum += g.graph.edge_count();
  audit.residues = static_cast<std::size_t>(h.residue_count);
  audit.bound_ok = audit.total() < 3 * audit.residues;
  return audit;
}

std::int64_t intra_node_feature(std::string_view aa_type, SSToken token) {
  return residue_code(aa_type) * 16 + static_cast<std::int64_t>(token);
}

std::int64_t inter_node_feature(SSToken token, int unit_size) {
  return static_cast<std::int64_t>(unit_size) * 16
         + static_cast<std::int64_t>(token);
}

Frame segment_frame(const ProteinChain &chain, const Segment &seg) {
  std::vector<Vec3> backbone;
  std::vector<Vec3> cas;
  backbone.reserve(4 * seg.size());
  for (int k = seg.start; k <= seg.end; ++k) {
    const Residue &r = chain.residues[k];
    backbone.insert(backbone.end(), { r.n, r.ca, r.c, r.o });
    cas.push_back(r.ca);
  }
  Frame f = compute_frame(backbone);
  f.center = centroid(cas);
  return f;
}

std::vector<IntraGraph> build_intra(const ProteinChain &chain,
                                    std::span<const Segment> segments,
                                    const SchullOptions &options) {
  std::vector<IntraGraph> out;
  out.reserve(segments.size());
  int expected = 0;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    const Segment &seg = segments[s];
    if (seg.start != expected || seg.end < seg.start
        || seg.end >= static_cast<int>(chain.size())) {
      throw Error(ErrorKind::kInvalidArgument,
                  "segments do not tile the chain at segment "
                      + std::to_string(s));
    }
    expected = seg.end + 1;

    try {
      std::vector<Vec3> pts;
      std::vector<std::int64_t> feats;
      for (int k = seg.start; k <= seg.end; ++k) {
        pts.push_back(chain.residues[k].ca);
        feats.push_back(intra_node_feature(chain.residues[k].aa_type,
                                           seg.token));
      }
      IntraGraph g { seg,
                     build_schull(PointCloud(std::move(pts), std::move(feats)),
                                  options),
                     segment_frame(chain, seg) };
      out.push_back(std::move(g));
    } catch (const Error &e) {
      throw e.with_context("segment " + std::to_string(s) + " ["
                           + std::to_string(seg.start) + ","
                           + std::to_string(seg.end) + "]");
    }
  }
  if (expected != static_cast<int>(chain.size()))
    throw Error(ErrorKind::kInvalidArgument,
                "segments do not cover the whole chain");
  return out;
}

InterGraph build_inter(std::span<const IntraGraph> intra,
                       const SchullOptions &options) {
  if (intra.empty())
    throw Error(ErrorKind::kInvalidArgument, "no structural units");

  std::vector<Vec3> centers;
  std::vector<std::int64_t> feats;
  for (const IntraGraph &g: intra) {
    centers.push_back(g.frame.center);
    feats.push_back(inter_node_feature(g.segment.token, g.segment.size()));
  }

  InterGraph inter;
  inter.graph =
      build_schull(PointCloud(std::move(centers), std::move(feats)), options);
  inter.features.reserve(inter.graph.edges.size());
  for (const GraphEdge &e: inter.graph.edges) {
    inter.features.push_back({ intra[e.i].frame.orientation.transpose()
                                   * intra[e.j].frame.orientation,
                               e.length, e.tau });
  }
  return inter;
}

namespace {

HierarchicalGraph assemble(const ProteinChain &chain,
                           std::span<const Segment> segs,
                           const SchullOptions &options) {
  HierarchicalGraph h;
  h.source_id = chain.source_id;
  h.chain_id = chain.chain_id();
  h.residue_count = static_cast<int>(chain.size());
  try {
    h.intra = build_intra(chain, segs, options);
  } catch (const Error &e) {
    throw e.with_context("intra");
  }
  try {
    h.inter = build_inter(h.intra, options);
  } catch (const Error &e) {
    throw e.with_context("inter");
  }
  h.jittered = h.inter.graph.jittered;
  for (const IntraGraph &g: h.intra)
    h.jittered = h.jittered || g.graph.jittered;
  return h;
}

}  // namespace

HierarchicalGraph build_hierarchy(const ProteinChain &chain,
                                  const HierarchyOptions &options) {
  DsspResult dssp;
  try {
    dssp = run_dssp(chain, options.hbond_threshold);
  } catch (const Error &e) {
    throw e.with_context("dssp");
  }
  return assemble(chain, segment(dssp.tokens, dssp.breaks), options.schull);
}

HierarchicalGraph build_hierarchy(const ProteinChain &chain,
                                  std::span<const SSToken> tokens,
                                  const HierarchyOptions &options) {
  if (tokens.size() != chain.size())
    throw Error(ErrorKind::kInvalidArgument,
                "token count does not match residue count");
  return assemble(chain, segment(tokens, ChainBreaks(chain)), options.schull);
}

}  // namespace sshg
