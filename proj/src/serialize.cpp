//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "sshg/serialize.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "sshg/error.h"
#include "sshg/hash.h"

namespace sshg {
namespace {

using json = nlohmann::ordered_json;

json vec_json(const Vec3 &v) {
  return json::array({ round_sig9(v.x()), round_sig9(v.y()),
                       round_sig9(v.z()) });
}

json mat_json(const Mat3 &m) {
  json a = json::array();
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      a.push_back(round_sig9(m(r, c)));
  return a;
}

[[noreturn]] void schema_fail(const std::string &what) {
  throw Error(ErrorKind::kSchemaError, what);
}

const json &field(const json &obj, const char *key) {
  if (!obj.is_object() || !obj.contains(key))
    schema_fail(std::string("missing key \"") + key + "\"");
  return obj.at(key);
}

int int_field(const json &obj, const char *key) {
  const json &v = field(obj, key);
  if (!v.is_number_integer())
    schema_fail(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

std::string string_field(const json &obj, const char *key) {
  const json &v = field(obj, key);
  if (!v.is_string())
    schema_fail(std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

double real_at(const json &arr, std::size_t k) {
  if (!arr.is_array() || k >= arr.size() || !arr[k].is_number())
    schema_fail("expected a number");
  return arr[k].get<double>();
}

int int_at(const json &arr, std::size_t k) {
  if (!arr.is_array() || k >= arr.size() || !arr[k].is_number_integer())
    schema_fail("expected an integer");
  return arr[k].get<int>();
}

Vec3 read_vec(const json &arr) {
  if (!arr.is_array() || arr.size() != 3)
    schema_fail("expected a coordinate triple");
  return { real_at(arr, 0), real_at(arr, 1), real_at(arr, 2) };
}

Mat3 read_mat(const json &arr) {
  if (!arr.is_array() || arr.size() != 9)
    schema_fail("expected 9 matrix entries");
  Mat3 m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      m(r, c) = real_at(arr, 3 * r + c);
  return m;
}

SSToken read_token(const json &v) {
  if (!v.is_string() || v.get<std::string>().size() != 1)
    schema_fail("expected a one-letter token");
  auto t = token_from_char(v.get<std::string>()[0]);
  if (!t)
    schema_fail("unknown token " + v.get<std::string>());
  return *t;
}

std::vector<GraphEdge> read_edges(const json &arr, std::size_t nodes) {
  if (!arr.is_array())
    schema_fail("edges must be an array");
  std::vector<GraphEdge> edges;
  for (const json &e: arr) {
    GraphEdge g { int_at(e, 0), int_at(e, 1), real_at(e, 2), real_at(e, 3) };
    if (g.i < 0 || g.j <= g.i || static_cast<std::size_t>(g.j) >= nodes)
      schema_fail("edge endpoints out of range");
    edges.push_back(g);
  }
  return edges;
}

}  // namespace

double round_sig9(double x) {
  if (!std::isfinite(x) || x == 0)
    return x;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return std::strtod(buf, nullptr);
}

json to_json(const HierarchicalGraph &h, const BuildMeta &meta) {
  json doc;
  char seed[16];
  std::snprintf(seed, sizeof(seed), "0x%08x", kHashSeed);
  doc["meta"] = {
    { "source_id", h.source_id },
    { "chain_id", std::string(1, h.chain_id) },
    { "tool_version", kToolVersion },
    { "hash", "murmur3_x64_128" },
    { "hash_seed", seed },
    { "quantization_scale", meta.quant.scale },
    { "jitter", meta.jitter_enabled },
    { "jittered", h.jittered },
    { "tau", "angle at the centroid between projected endpoints, radians" },
  };

  json segments = json::array();
  json intra = json::array();
  for (const IntraGraph &g: h.intra) {
    const Segment &s = g.segment;
    segments.push_back({ { "start", s.start },
                         { "end", s.end },
                         { "token", std::string(1, token_char(s.token)) } });

    json nodes = json::array();
    for (std::size_t v = 0; v < g.graph.node_count(); ++v) {
      // The amino acid type is recovered from the feature code.
      std::int64_t code = g.graph.node_features[v] / 16;
      std::string aa;
      for (int k = 6; k >= 0; --k) {
        char ch = static_cast<char>((code >> (8 * k)) & 0xff);
        if (ch != 0)
          aa.push_back(ch);
      }
      nodes.push_back(json::array({ s.start + static_cast<int>(v), aa,
                                    vec_json(g.graph.node_coords[v]),
                                    round_sig9(g.graph.node_attrs[v]) }));
    }
    json edges = json::array();
    for (const GraphEdge &e: g.graph.edges)
      edges.push_back(json::array(
          { e.i, e.j, round_sig9(e.length), round_sig9(e.tau) }));
    intra.push_back({ { "nodes", std::move(nodes) },
                      { "edges", std::move(edges) },
                      { "frame",
                        { { "orientation", mat_json(g.frame.orientation) },
                          { "center", vec_json(g.frame.center) } } } });
  }
  doc["segments"] = std::move(segments);
  doc["intra"] = std::move(intra);

  json inter_nodes = json::array();
  for (const IntraGraph &g: h.intra)
    inter_nodes.push_back(
        json::array({ vec_json(g.frame.center),
                      std::string(1, token_char(g.segment.token)),
                      g.segment.size() }));
  json inter_edges = json::array();
  for (std::size_t k = 0; k < h.inter.graph.edges.size(); ++k) {
    const GraphEdge &e = h.inter.graph.edges[k];
    inter_edges.push_back(json::array(
        { e.i, e.j, round_sig9(e.length), round_sig9(e.tau),
          mat_json(h.inter.features[k].rel_orientation) }));
  }
  doc["inter"] = { { "nodes", std::move(inter_nodes) },
                   { "edges", std::move(inter_edges) } };

  EdgeAudit a = total_edges(h);
  doc["audit"] = { { "N", h.residue_count },
                   { "I", h.intra.size() },
                   { "inter_edges", a.inter },
                   { "intra_edges_sum", a.intra_sum },
                   { "bound_ok", a.bound_ok } };
  return doc;
}

HierarchicalGraph hierarchy_from_json(const json &doc) {
  HierarchicalGraph h;
  const json &meta = field(doc, "meta");
  h.source_id = string_field(meta, "source_id");
  std::string chain = string_field(meta, "chain_id");
  h.chain_id = chain.empty() ? ' ' : chain[0];
  const auto jittered = meta.find("jittered");
  h.jittered = jittered != meta.end() && jittered->is_boolean()
               && jittered->get<bool>();

  const json &segments = field(doc, "segments");
  const json &intra = field(doc, "intra");
  if (!segments.is_array() || !intra.is_array()
      || segments.size() != intra.size() || segments.empty())
    schema_fail("segments and intra must be nonempty arrays of equal length");

  int expected = 0;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    Segment seg { int_field(segments[s], "start"),
                  int_field(segments[s], "end"),
                  read_token(field(segments[s], "token")) };
    if (seg.start != expected || seg.end < seg.start)
      schema_fail("segments do not tile the chain");
    expected = seg.end + 1;

    const json &nodes = field(intra[s], "nodes");
    if (!nodes.is_array() || static_cast<int>(nodes.size()) != seg.size())
      schema_fail("intra node count does not match segment length");
    IntraGraph g;
    g.segment = seg;
    for (const json &n: nodes) {
      if (!n.is_array() || n.size() != 4 || !n[1].is_string())
        schema_fail("malformed intra node");
      g.graph.node_coords.push_back(read_vec(n[2]));
      g.graph.node_attrs.push_back(real_at(n, 3));
      g.graph.node_features.push_back(
          intra_node_feature(n[1].get<std::string>(), seg.token));
    }
    g.graph.centroid = centroid(g.graph.node_coords);
    g.graph.edges = read_edges(field(intra[s], "edges"), nodes.size());
    const json &frame = field(intra[s], "frame");
    g.frame.orientation = read_mat(field(frame, "orientation"));
    g.frame.center = read_vec(field(frame, "center"));
    h.intra.push_back(std::move(g));
  }
  h.residue_count = expected;

  const json &inter = field(doc, "inter");
  const json &inodes = field(inter, "nodes");
  if (!inodes.is_array() || inodes.size() != h.intra.size())
    schema_fail("inter node count does not match unit count");
  GeometricGraph &ig = h.inter.graph;
  for (const json &n: inodes) {
    if (!n.is_array() || n.size() != 3)
      schema_fail("malformed inter node");
    ig.node_coords.push_back(read_vec(n[0]));
    ig.node_features.push_back(
        inter_node_feature(read_token(n[1]), int_at(n, 2)));
  }
  ig.centroid = centroid(ig.node_coords);
  for (const Vec3 &p: ig.node_coords)
    ig.node_attrs.push_back((p - ig.centroid).norm());

  const json &iedges = field(inter, "edges");
  if (!iedges.is_array())
    schema_fail("inter edges must be an array");
  for (const json &e: iedges) {
    if (!e.is_array() || e.size() != 5)
      schema_fail("malformed inter edge");
    GraphEdge g { int_at(e, 0), int_at(e, 1), real_at(e, 2), real_at(e, 3) };
    if (g.i < 0 || g.j <= g.i || static_cast<std::size_t>(g.j) >= inodes.size())
      schema_fail("inter edge endpoints out of range");
    ig.edges.push_back(g);
    h.inter.features.push_back({ read_mat(e[4]), g.length, g.tau });
  }
  ig.jittered = h.jittered;

  const json &audit = field(doc, "audit");
  if (int_field(audit, "N") != h.residue_count)
    schema_fail("audit.N does not match the segments");
  return h;
}

}  // namespace sshg
