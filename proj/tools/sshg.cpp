//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "json.hpp"

#include "sshg/dssp.h"
#include "sshg/error.h"
#include "sshg/hash.h"
#include "sshg/hierarchy.h"
#include "sshg/pdbio.h"
#include "sshg/serialize.h"
#include "sshg/stats.h"
#include "sshg/verify.h"
#include "sshg/wlref.h"

namespace {

using sshg::Error;
using sshg::ErrorKind;

enum ExitCode {
  kExitOk = 0,
  kExitPartial = 1,
  kExitParse = 2,
  kExitDegenerate = 3,
  kExitInvariance = 4,
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::kDegeneratePoint:
  case ErrorKind::kDegenerateConfiguration:
  case ErrorKind::kDuplicateDirection:
  case ErrorKind::kCoincidentPoints:
  case ErrorKind::kAtomClash:
  case ErrorKind::kOverflow:
    return kExitDegenerate;
  default:
    return kExitParse;
  }
}

// Outcome of one input file: text for stdout, a diagnostic for stderr and
// the exit code this file alone would produce.
struct FileResult {
  std::string out;
  std::string err;
  int code = kExitOk;
};

FileResult run_guarded(const std::string &path,
                       const std::function<FileResult()> &fn) {
  try {
    return fn();
  } catch (const Error &e) {
    return { "", path + ": " + e.what() + "\n", exit_code_for(e.kind()) };
  } catch (const std::exception &e) {
    return { "", path + ": " + e.what() + "\n", kExitParse };
  }
}

// Processes every input on a bounded pool of workers; results come back in
// input order regardless of which worker finished first.
std::vector<FileResult>
process_all(const std::vector<std::string> &inputs, unsigned threads,
            const std::function<FileResult(std::size_t, const std::string &)>
                &fn) {
  std::vector<FileResult> results(inputs.size());
  std::atomic<std::size_t> next { 0 };
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++)
      results[i] = run_guarded(inputs[i], [&] { return fn(i, inputs[i]); });
  };
  unsigned n = std::max(1U, std::min<unsigned>(
                                threads, static_cast<unsigned>(inputs.size())));
  if (n == 1 || inputs.size() < 2) {
    worker();
    return results;
  }
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < n; ++k)
    pool.emplace_back(worker);
  for (std::thread &t: pool)
    t.join();
  return results;
}

int emit(const std::vector<FileResult> &results, bool partial_is_one) {
  int worst = kExitOk;
  int failed = 0;
  for (const FileResult &r: results) {
    std::cout << r.out;
    std::cerr << r.err;
    if (r.code != kExitOk) {
      ++failed;
      worst = std::max(worst, r.code);
    }
  }
  std::cout.flush();
  if (failed == 0)
    return kExitOk;
  if (partial_is_one)
    return kExitPartial;
  if (failed < static_cast<int>(results.size()))
    return kExitPartial;
  return worst;
}

std::vector<sshg::ProteinChain> load_chains(const std::string &path,
                                            const std::string &chain) {
  sshg::PdbParseResult parsed = sshg::parse_pdb_file(path);
  if (chain.empty())
    return std::move(parsed.chains);
  std::vector<sshg::ProteinChain> picked;
  for (sshg::ProteinChain &c: parsed.chains) {
    if (std::string(1, c.chain_id()) == chain)
      picked.push_back(std::move(c));
  }
  if (picked.empty())
    throw Error(ErrorKind::kInvalidArgument,
                "no chain '" + chain + "' in " + path);
  return picked;
}

sshg::HierarchyOptions build_options(bool jitter) {
  sshg::HierarchyOptions opts;
  opts.schull.jitter = jitter;
  return opts;
}

bool parse_on_off(const std::string &v) {
  return v == "on";
}

std::vector<double> parse_cutoffs(const std::string &text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      continue;
    std::size_t used = 0;
    double v = std::stod(item, &used);
    if (used != item.size() || !(v > 0))
      throw Error(ErrorKind::kInvalidArgument, "bad cutoff '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::string fmt(double x, const char *spec = "%.4g") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, x);
  return buf;
}

// --- subcommands ----------------------------------------------------------

struct Common {
  std::vector<std::string> inputs;
  std::string chain;
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
};

int cmd_tokens(const Common &c) {
  const bool many = c.inputs.size() > 1;
  auto results = process_all(c.inputs, c.threads,
                             [&](std::size_t, const std::string &p) {
    FileResult r;
    for (const sshg::ProteinChain &chain: load_chains(p, c.chain)) {
      if (many)
        r.out += p + " ";
      r.out += std::string(1, chain.chain_id()) + " "
               + sshg::token_string(sshg::assign_tokens(chain)) + "\n";
    }
    return r;
  });
  return emit(results, false);
}

int cmd_build(const Common &c, const std::string &out_path, bool jitter) {
  if (c.inputs.size() != 1) {
    std::cerr << "build takes exactly one input\n";
    return kExitParse;
  }
  FileResult r = run_guarded(c.inputs[0], [&] {
    std::vector<sshg::ProteinChain> chains = load_chains(c.inputs[0], c.chain);
    sshg::HierarchicalGraph h =
        sshg::build_hierarchy(chains.front(), build_options(jitter));
    FileResult fr;
    sshg::EdgeAudit audit = sshg::total_edges(h);
    if (!audit.bound_ok)
      fr.err = "warning: edge total " + std::to_string(audit.total())
               + " is not below 3N = " + std::to_string(3 * audit.residues)
               + "\n";
    sshg::BuildMeta meta;
    meta.jitter_enabled = jitter;
    fr.out = sshg::to_json(h, meta).dump(1) + "\n";
    return fr;
  });
  if (r.code == kExitOk && !out_path.empty() && out_path != "-") {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << out_path << ": cannot open for writing\n";
      return kExitParse;
    }
    f << r.out;
    r.out.clear();
  }
  return emit({ r }, false);
}

nlohmann::ordered_json stats_json(const sshg::StructureStats &s) {
  nlohmann::ordered_json radius = nlohmann::ordered_json::object();
  nlohmann::ordered_json ratio = nlohmann::ordered_json::object();
  for (std::size_t k = 0; k < s.cutoffs.size(); ++k) {
    radius[fmt(s.cutoffs[k], "%g")] = s.radius_edges[k];
    ratio[fmt(s.cutoffs[k], "%g")] = sshg::round_sig9(s.edge_ratio[k]);
  }
  return { { "source_id", s.source_id },
           { "N", s.residues },
           { "I", s.units },
           { "inter_edges", s.inter_edges },
           { "intra_edges_sum", s.intra_edges_sum },
           { "sshg_edges", s.sshg_edges() },
           { "bound_3N", s.bound_3n },
           { "bound_ok", s.bound_ok },
           { "radius_graph_edges", radius },
           { "edge_ratio", ratio } };
}

int cmd_stats(const Common &c, const std::string &cutoff_text,
              const std::string &format, bool jitter) {
  std::vector<double> cutoffs;
  try {
    cutoffs = parse_cutoffs(cutoff_text);
  } catch (const std::exception &e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  }

  std::vector<std::optional<sshg::StructureStats>> rows(c.inputs.size());
  auto results = process_all(c.inputs, c.threads,
                             [&](std::size_t idx, const std::string &p) {
    std::vector<sshg::ProteinChain> chains = load_chains(p, c.chain);
    std::vector<sshg::HierarchicalGraph> hs;
    std::vector<sshg::Vec3> cas;
    for (const sshg::ProteinChain &ch: chains) {
      hs.push_back(sshg::build_hierarchy(ch, build_options(jitter)));
      for (const sshg::Residue &r: ch.residues)
        cas.push_back(r.ca);
    }
    rows[idx] = sshg::compute_stats(p, hs, cas, cutoffs);
    return FileResult {};
  });

  std::vector<sshg::StructureStats> ok;
  for (auto &r: rows) {
    if (r)
      ok.push_back(*r);
  }
  sshg::StatsSummary sum = sshg::summarize(ok);

  std::ostringstream os;
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["cutoffs"] = cutoffs;
    doc["structures"] = nlohmann::ordered_json::array();
    for (const auto &s: ok)
      doc["structures"].push_back(stats_json(s));
    nlohmann::ordered_json radius = nlohmann::ordered_json::object();
    nlohmann::ordered_json ratio = nlohmann::ordered_json::object();
    for (std::size_t k = 0; k < sum.cutoffs.size(); ++k) {
      radius[fmt(sum.cutoffs[k], "%g")] =
          sshg::round_sig9(sum.mean_radius_edges[k]);
      ratio[fmt(sum.cutoffs[k], "%g")] =
          sshg::round_sig9(sum.mean_edge_ratio[k]);
    }
    doc["mean"] = { { "structures", sum.structures },
                    { "N", sshg::round_sig9(sum.mean_residues) },
                    { "I", sshg::round_sig9(sum.mean_units) },
                    { "sshg_edges", sshg::round_sig9(sum.mean_sshg_edges) },
                    { "radius_graph_edges", radius },
                    { "edge_ratio", ratio } };
    os << doc.dump(1) << "\n";
  } else {
    os << "source\tN\tI\tinter\tintra\tsshg\t3N";
    for (double cut: cutoffs)
      os << "\tr@" << fmt(cut, "%g");
    for (double cut: cutoffs)
      os << "\tratio@" << fmt(cut, "%g");
    os << "\n";
    for (const auto &s: ok) {
      os << s.source_id << "\t" << s.residues << "\t" << s.units << "\t"
         << s.inter_edges << "\t" << s.intra_edges_sum << "\t"
         << s.sshg_edges() << "\t" << s.bound_3n;
      for (std::size_t n: s.radius_edges)
        os << "\t" << n;
      for (double q: s.edge_ratio)
        os << "\t" << fmt(q, "%.3f");
      os << "\n";
    }
    os << "mean(" << sum.structures << ")\t" << fmt(sum.mean_residues, "%.1f")
       << "\t" << fmt(sum.mean_units, "%.1f") << "\t\t\t"
       << fmt(sum.mean_sshg_edges, "%.1f") << "\t";
    for (double m: sum.mean_radius_edges)
      os << "\t" << fmt(m, "%.1f");
    for (double m: sum.mean_edge_ratio)
      os << "\t" << fmt(m, "%.3f");
    os << "\n";
  }
  results.push_back({ os.str(), "", kExitOk });
  return emit(results, true);
}

int cmd_verify(const Common &c, int trials, std::uint64_t seed, bool jitter,
               const std::string &replay, bool inject_fault) {
  if (c.inputs.size() != 1) {
    std::cerr << "verify takes exactly one input\n";
    return kExitParse;
  }
  bool violated = false;
  FileResult r = run_guarded(c.inputs[0], [&] {
    sshg::VerifyOptions opts;
    opts.trials = trials;
    opts.seed = seed;
    opts.build = build_options(jitter);
    if (!replay.empty()) {
      std::stringstream ss(replay);
      std::vector<double> v;
      for (double x; ss >> x;)
        v.push_back(x);
      if (v.size() != 12)
        throw Error(ErrorKind::kInvalidArgument,
                    "--replay expects 12 numbers (row-major Q, then t)");
      sshg::Mat3 q;
      for (int k = 0; k < 9; ++k)
        q(k / 3, k % 3) = v[k];
      opts.motions.push_back(sshg::RigidMotion(q, { v[9], v[10], v[11] }));
    }
    if (inject_fault) {
      opts.post_build_hook = [](sshg::HierarchicalGraph &h) {
        for (sshg::IntraGraph &g: h.intra) {
          if (!g.graph.edges.empty()) {
            g.graph.edges.front().length += 1e-3;
            return;
          }
        }
        h.intra.front().graph.node_attrs.front() += 1e-3;
      };
    }

    FileResult fr;
    std::ostringstream os;
    for (const sshg::ProteinChain &chain: load_chains(c.inputs[0], c.chain)) {
      sshg::VerifyReport rep = sshg::verify_invariance(chain, opts);
      os << "chain " << chain.chain_id() << ": residues " << chain.size()
         << " trials " << rep.trials.size() << " failures " << rep.failures()
         << " audit " << (rep.reference_audit_ok ? "ok" : "VIOLATED")
         << " fingerprint " << rep.reference.hex() << "\n";
      for (const sshg::VerifyTrial &t: rep.trials) {
        if (t.ok())
          continue;
        os << "  trial " << t.index << " FAIL: " << t.detail << "\n"
           << "    replay: --replay \"" << sshg::motion_to_string(t.motion)
           << "\"\n";
      }
      violated = violated || !rep.ok();
    }
    os << (violated ? "FAIL" : "PASS") << "\n";
    fr.out = os.str();
    return fr;
  });
  if (r.code == kExitOk && violated)
    r.code = kExitInvariance;
  int code = emit({ r }, false);
  return violated && code == kExitOk ? kExitInvariance : code;
}

int cmd_fingerprint(const Common &c, bool jitter) {
  auto results = process_all(c.inputs, c.threads,
                             [&](std::size_t, const std::string &p) {
    std::vector<sshg::ProteinChain> chains = load_chains(p, c.chain);
    std::vector<sshg::Fingerprint> fps;
    for (const sshg::ProteinChain &ch: chains)
      fps.push_back(sshg::fingerprint(
          sshg::build_hierarchy(ch, build_options(jitter))));
    sshg::Fingerprint fp = fps.front();
    if (fps.size() > 1) {
      // Several chains: order independent combination of their prints.
      std::sort(fps.begin(), fps.end());
      sshg::HashBuilder b;
      b.add(std::uint64_t { 0x4d554c5449 }).add_all(fps);
      fp = b.finish();
    }
    return FileResult { p + " " + fp.hex() + "\n", "", kExitOk };
  });
  return emit(results, false);
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app { "sshg: hierarchical secondary-structure graphs for protein "
                 "backbones" };
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sshg::kToolVersion));

  Common common;
  auto add_common = [&](CLI::App *sub, bool many) {
    if (many)
      sub->add_option("inputs", common.inputs, "PDB files ('-' for stdin)")
          ->required();
    else
      sub->add_option("input", common.inputs, "PDB file ('-' for stdin)")
          ->required()
          ->expected(1);
    sub->add_option("--chain", common.chain, "Only use this chain id");
    sub->add_option("--threads", common.threads, "Worker threads")
        ->check(CLI::PositiveNumber);
  };

  std::string jitter = "off";
  auto add_jitter = [&](CLI::App *sub) {
    sub->add_option("--jitter", jitter,
                    "Retry degenerate point sets with a 1e-7 A jitter")
        ->check(CLI::IsMember({ "on", "off" }));
  };

  CLI::App *tokens =
      app.add_subcommand("tokens", "Print secondary-structure tokens");
  add_common(tokens, true);

  CLI::App *build = app.add_subcommand("build", "Build and serialize SSHG");
  add_common(build, false);
  add_jitter(build);
  std::string out_path;
  build->add_option("--out", out_path, "Output JSON file (default stdout)");

  CLI::App *stats = app.add_subcommand(
      "stats", "Compare SSHG edge counts to radius graphs");
  add_common(stats, true);
  add_jitter(stats);
  std::string cutoffs = "4,6,8,10,16";
  std::string format = "table";
  stats->add_option("--cutoffs", cutoffs, "Comma separated radii in A");
  stats->add_option("--format", format, "table or json")
      ->check(CLI::IsMember({ "table", "json" }));

  CLI::App *verify = app.add_subcommand(
      "verify", "Check invariance under random rigid motions");
  add_common(verify, false);
  add_jitter(verify);
  int trials = 100;
  std::uint64_t seed = 1;
  std::string replay;
  bool inject_fault = false;
  verify->add_option("--trials", trials, "Number of random motions")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "Seed for the motion generator");
  verify->add_option("--replay", replay,
                     "Check one motion: 9 rotation entries then 3 translation");
  verify->add_flag("--inject-fault", inject_fault)->group("");

  CLI::App *fp =
      app.add_subcommand("fingerprint", "Print rigid-motion invariant hashes");
  add_common(fp, true);
  add_jitter(fp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  const bool jit = parse_on_off(jitter);
  if (tokens->parsed())
    return cmd_tokens(common);
  if (build->parsed())
    return cmd_build(common, out_path, jit);
  if (stats->parsed())
    return cmd_stats(common, cutoffs, format, jit);
  if (verify->parsed())
    return cmd_verify(common, trials, seed, jit, replay, inject_fault);
  if (fp->parsed())
    return cmd_fingerprint(common, jit);
  return kExitParse;
}
