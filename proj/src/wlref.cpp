//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "sshg/wlref.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "sshg/error.h"

namespace sshg {
namespace {

// Domain tags keep hashes of different roles apart.
enum Tag: std::uint64_t {
  kTagIntraInit = 1,
  kTagRound = 2,
  kTagMessage = 3,
  kTagReadout = 4,
  kTagInterInit = 5,
};

std::vector<std::int64_t> edge_label(double length, double tau,
                                     const QuantConfig &cfg) {
  return { quantize(length, cfg), quantize(tau, cfg) };
}

}  // namespace

std::int64_t quantize(double x, const QuantConfig &cfg) {
  if (!(cfg.scale > 0))
    throw Error(ErrorKind::kInvalidArgument, "quantization scale must be > 0");
  const double y = x * cfg.scale;
  constexpr double kLimit = 4611686018427387904.0;  // 2^62
  if (!std::isfinite(y) || std::fabs(y) > kLimit)
    throw Error(ErrorKind::kOverflow, "cannot quantize " + std::to_string(x));
  // The default floating point environment rounds half to even.
  return static_cast<std::int64_t>(std::nearbyint(y));
}

std::vector<std::vector<Hash128>> wl_refine(const LabeledGraph &g,
                                            int rounds) {
  if (rounds < 0)
    throw Error(ErrorKind::kInvalidArgument, "negative round count");
  std::vector<std::vector<Hash128>> history { g.initial };
  std::vector<Hash128> messages;
  for (int t = 0; t < rounds; ++t) {
    const std::vector<Hash128> &prev = history.back();
    std::vector<Hash128> next(prev.size());
    for (std::size_t v = 0; v < prev.size(); ++v) {
      messages.clear();
      for (const LabeledGraph::Arc &a: g.arcs[v]) {
        HashBuilder m;
        m.add(std::uint64_t { kTagMessage }).add(prev[a.to]);
        m.add(static_cast<std::uint64_t>(a.label.size()));
        for (std::int64_t x: a.label)
          m.add(x);
        messages.push_back(m.finish());
      }
      std::sort(messages.begin(), messages.end());
      HashBuilder c;
      c.add(std::uint64_t { kTagRound }).add(prev[v]).add_all(messages);
      next[v] = c.finish();
    }
    history.push_back(std::move(next));
  }
  return history;
}

Hash128 readout(std::vector<Hash128> colors) {
  std::sort(colors.begin(), colors.end());
  HashBuilder b;
  b.add(std::uint64_t { kTagReadout }).add_all(colors);
  return b.finish();
}

LabeledGraph intra_labeled_graph(const IntraGraph &g, const QuantConfig &cfg) {
  const GeometricGraph &gg = g.graph;
  LabeledGraph lg;
  lg.arcs.resize(gg.node_count());
  for (std::size_t v = 0; v < gg.node_count(); ++v) {
    HashBuilder b;
    b.add(std::uint64_t { kTagIntraInit })
        .add(gg.node_features[v])
        .add(quantize(gg.node_attrs[v], cfg));
    lg.initial.push_back(b.finish());
  }
  for (const GraphEdge &e: gg.edges) {
    auto label = edge_label(e.length, e.tau, cfg);
    lg.arcs[e.i].push_back({ e.j, label });
    lg.arcs[e.j].push_back({ e.i, std::move(label) });
  }
  return lg;
}

Hash128 intra_code(const IntraGraph &g, int rounds, const QuantConfig &cfg) {
  if (rounds < 1)
    throw Error(ErrorKind::kInvalidArgument, "intra rounds must be >= 1");
  return readout(wl_refine(intra_labeled_graph(g, cfg), rounds).back());
}

LabeledGraph inter_labeled_graph(const HierarchicalGraph &h, int intra_rounds,
                                 const QuantConfig &cfg) {
  const GeometricGraph &gg = h.inter.graph;
  LabeledGraph lg;
  lg.arcs.resize(gg.node_count());
  for (std::size_t v = 0; v < gg.node_count(); ++v) {
    HashBuilder b;
    b.add(std::uint64_t { kTagInterInit })
        .add(intra_code(h.intra[v], intra_rounds, cfg))
        .add(gg.node_features[v])
        .add(quantize(gg.node_attrs[v], cfg));
    lg.initial.push_back(b.finish());
  }
  for (std::size_t k = 0; k < gg.edges.size(); ++k) {
    const GraphEdge &e = gg.edges[k];
    const Mat3 &rel = h.inter.features[k].rel_orientation;
    // Seen from i the neighbour's frame is g_i^T g_j, seen from j it is the
    // transpose.
    auto from_i = edge_label(e.length, e.tau, cfg);
    auto from_j = from_i;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        from_i.push_back(quantize(rel(r, c), cfg));
        from_j.push_back(quantize(rel(c, r), cfg));
      }
    }
    lg.arcs[e.i].push_back({ e.j, std::move(from_i) });
    lg.arcs[e.j].push_back({ e.i, std::move(from_j) });
  }
  return lg;
}

Fingerprint fingerprint(const HierarchicalGraph &h, WlRounds rounds,
                        const QuantConfig &cfg) {
  if (rounds.intra < 1 || rounds.inter < 1)
    throw Error(ErrorKind::kInvalidArgument, "round counts must be >= 1");
  return readout(
      wl_refine(inter_labeled_graph(h, rounds.intra, cfg), rounds.inter)
          .back());
}

std::string fingerprint_preimage(const HierarchicalGraph &h, WlRounds rounds,
                                 const QuantConfig &cfg) {
  std::ostringstream os;
  os << "residues " << h.residue_count << " units " << h.intra.size()
     << " rounds " << rounds.intra << "/" << rounds.inter << " scale "
     << cfg.scale << "\n";
  for (std::size_t s = 0; s < h.intra.size(); ++s) {
    const IntraGraph &g = h.intra[s];
    os << "unit " << s << " [" << g.segment.start << "," << g.segment.end
       << "] code " << intra_code(g, rounds.intra, cfg).hex() << "\n";
    for (std::size_t v = 0; v < g.graph.node_count(); ++v)
      os << "  node " << v << " f " << g.graph.node_features[v] << " r "
         << quantize(g.graph.node_attrs[v], cfg) << "\n";
    for (const GraphEdge &e: g.graph.edges)
      os << "  edge " << e.i << " " << e.j << " l " << quantize(e.length, cfg)
         << " t " << quantize(e.tau, cfg) << "\n";
  }
  const GeometricGraph &gg = h.inter.graph;
  for (std::size_t v = 0; v < gg.node_count(); ++v)
    os << "inter node " << v << " f " << gg.node_features[v] << " r "
       << quantize(gg.node_attrs[v], cfg) << "\n";
  for (std::size_t k = 0; k < gg.edges.size(); ++k) {
    const GraphEdge &e = gg.edges[k];
    os << "inter edge " << e.i << " " << e.j << " l "
       << quantize(e.length, cfg) << " t " << quantize(e.tau, cfg) << " g";
    const Mat3 &rel = h.inter.features[k].rel_orientation;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        os << " " << quantize(rel(r, c), cfg);
    os << "\n";
  }
  return os.str();
}

DistinguishResult distinguish(const ProteinChain &a, const ProteinChain &b,
                              const QuantConfig &cfg, WlRounds rounds,
                              const HierarchyOptions &options) {
  DistinguishResult r;
  r.a = fingerprint(build_hierarchy(a, options), rounds, cfg);
  r.b = fingerprint(build_hierarchy(b, options), rounds, cfg);
  r.same = r.a == r.b;
  return r;
}

}  // namespace sshg
