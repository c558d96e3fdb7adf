//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "sshg/stats.h"

#include <limits>

#include "sshg/error.h"
#include "sshg/schull.h"

namespace sshg {

StructureStats compute_stats(std::string source_id,
                             std::span<const HierarchicalGraph> chains,
                             std::span<const Vec3> ca_coords,
                             std::span<const double> cutoffs) {
  StructureStats s;
  s.source_id = std::move(source_id);
  for (const HierarchicalGraph &h: chains) {
    EdgeAudit a = total_edges(h);
    s.residues += a.residues;
    s.units += h.intra.size();
    s.inter_edges += a.inter;
    s.intra_edges_sum += a.intra_sum;
  }
  s.bound_3n = 3 * s.residues;
  s.bound_ok = s.sshg_edges() < s.bound_3n;

  for (double cutoff: cutoffs) {
    std::size_t n = count_radius_edges(ca_coords, cutoff);
    s.cutoffs.push_back(cutoff);
    s.radius_edges.push_back(n);
    s.edge_ratio.push_back(
        s.sshg_edges() == 0
            ? std::numeric_limits<double>::infinity()
            : static_cast<double>(n) / static_cast<double>(s.sshg_edges()));
  }
  return s;
}

StatsSummary summarize(std::span<const StructureStats> rows) {
  StatsSummary sum;
  sum.structures = rows.size();
  if (rows.empty())
    return sum;
  sum.cutoffs = rows.front().cutoffs;
  sum.mean_radius_edges.assign(sum.cutoffs.size(), 0.0);
  sum.mean_edge_ratio.assign(sum.cutoffs.size(), 0.0);
  const double n = static_cast<double>(rows.size());
  for (const StructureStats &r: rows) {
    if (r.cutoffs != sum.cutoffs)
      throw Error(ErrorKind::kInvalidArgument,
                  "structures were counted at different cutoffs");
    sum.mean_residues += static_cast<double>(r.residues) / n;
    sum.mean_units += static_cast<double>(r.units) / n;
    sum.mean_sshg_edges += static_cast<double>(r.sshg_edges()) / n;
    for (std::size_t k = 0; k < sum.cutoffs.size(); ++k) {
      sum.mean_radius_edges[k] += static_cast<double>(r.radius_edges[k]) / n;
      sum.mean_edge_ratio[k] += r.edge_ratio[k] / n;
    }
  }
  return sum;
}

}  // namespace sshg
