//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SSHG_STATS_H_
#define SSHG_STATS_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sshg/hierarchy.h"

namespace sshg {

inline constexpr double kDefaultCutoffs[] = { 4, 6, 8, 10, 16 };

/// Edge counts for one structure (one input file). SSHG counts are summed
/// over its chains; the radius graph is taken over every CA in the file.
struct StructureStats {
  std::string source_id;
  std::size_t residues = 0;
  std::size_t units = 0;
  std::size_t inter_edges = 0;
  std::size_t intra_edges_sum = 0;
  std::size_t bound_3n = 0;
  bool bound_ok = false;
  std::vector<double> cutoffs;
  std::vector<std::size_t> radius_edges;  // parallel to cutoffs
  std::vector<double> edge_ratio;         // radius_edges / sshg edges

  std::size_t sshg_edges() const { return inter_edges + intra_edges_sum; }
};

StructureStats compute_stats(std::string source_id,
                             std::span<const HierarchicalGraph> chains,
                             std::span<const Vec3> ca_coords,
                             std::span<const double> cutoffs);

/// Arithmetic means over structures; edge ratios are averaged per structure.
struct StatsSummary {
  std::size_t structures = 0;
  double mean_residues = 0;
  double mean_units = 0;
  double mean_sshg_edges = 0;
  std::vector<double> cutoffs;
  std::vector<double> mean_radius_edges;
  std::vector<double> mean_edge_ratio;
};

StatsSummary summarize(std::span<const StructureStats> rows);

}  // namespace sshg

#endif  // SSHG_STATS_H_
