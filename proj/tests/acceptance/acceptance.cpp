//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

// Acceptance run. Prints one PASS/FAIL line per criterion and exits nonzero
// if any of them fails. Expected values come from the oracles in
// tests/support, never from the library under test.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "sshg/dssp.h"
#include "sshg/error.h"
#include "sshg/geometry.h"
#include "sshg/hierarchy.h"
#include "sshg/schull.h"
#include "sshg/stats.h"
#include "sshg/verify.h"
#include "sshg/wlref.h"
#include "synth.h"

namespace {

using namespace sshg;
using testing::load_fixture;

struct Outcome {
  bool pass = false;
  std::string summary;
};

// 1. Sparse and connected SCHull graphs on random clouds.
Outcome schull_sparse_connected() {
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<int> size(3, 200);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  int sparse_violations = 0, disconnected = 0, errors = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = size(rng);
    std::vector<Vec3> pts;
    for (int i = 0; i < n; ++i)
      pts.emplace_back(coord(rng), coord(rng), coord(rng));
    try {
      GeometricGraph g = build_schull(PointCloud(pts));
      if (static_cast<long>(g.edge_count()) > 3L * n - 6)
        ++sparse_violations;
      std::vector<std::pair<int, int>> edges;
      for (const GraphEdge &e: g.edges)
        edges.emplace_back(e.i, e.j);
      if (!testing::oracle_connected(pts.size(), edges))
        ++disconnected;
    } catch (const Error &e) {
      std::cerr << "  cloud " << trial << ": " << e.what() << "\n";
      ++errors;
    }
  }
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  std::ostringstream os;
  os << "1000 clouds, " << sparse_violations << " over 3n-6, "
     << disconnected << " disconnected, " << errors << " errors, " << seconds
     << " s";
  return { sparse_violations == 0 && disconnected == 0 && errors == 0
               && seconds < 10.0,
           os.str() };
}

// 2. Total edge bound on fixtures and random chains.
Outcome edge_bound() {
  int checked = 0, violations = 0;
  HierarchyOptions opts;
  opts.schull.jitter = true;
  for (const auto &[name, unused]: testing::generate_fixtures()) {
    EdgeAudit a = total_edges(build_hierarchy(load_fixture(name), opts));
    ++checked;
    if (!(a.total() < 3 * a.residues)) {
      std::cerr << "  " << name << ": " << a.total() << " edges\n";
      ++violations;
    }
  }
  std::mt19937_64 rng(2002);
  std::uniform_int_distribution<int> size(8, 100);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = size(rng);
    ProteinChain chain = testing::random_chain(n, rng);
    auto tokens = testing::random_tokens(n, rng);
    EdgeAudit a = total_edges(build_hierarchy(chain, tokens, opts));
    ++checked;
    if (!(a.total() < 3 * a.residues)) {
      std::cerr << "  random chain " << trial << ": " << a.total()
                << " edges for " << n << " residues\n";
      ++violations;
    }
  }
  return { violations == 0, std::to_string(checked) + " structures, "
                                + std::to_string(violations) + " violations" };
}

// 3. Secondary-structure assignment on oracle-validated fixtures.
Outcome dssp_fixtures() {
  std::vector<std::string> problems;
  auto check = [&](bool ok, const std::string &what) {
    if (!ok)
      problems.push_back(what);
  };

  // Oracle validation first: the fixture must really have the pattern.
  ProteinChain helix = estimate_hydrogens(load_fixture("helix12"));
  auto helix_bonds = testing::oracle_hbonds(helix);
  for (int i = 0; i + 4 < 12; ++i)
    check(helix_bonds.count({ i, i + 4 }) == 1,
          "oracle: helix lacks Hbond(" + std::to_string(i) + ", i+4)");
  std::string helix_tokens = token_string(assign_tokens(helix));
  for (int i = 1; i < 11; ++i)
    check(helix_tokens[i] == 'H', "helix interior: " + helix_tokens);

  ProteinChain hairpin = load_fixture("hairpin");
  auto bridges = testing::oracle_antiparallel_bridges(hairpin);
  for (int i = 1; i <= 6; ++i)
    check(bridges.count({ i, 15 - i }) == 1,
          "oracle: hairpin lacks bridge at " + std::to_string(i));
  std::string hairpin_tokens = token_string(assign_tokens(hairpin));
  for (const auto &[i, j]: bridges)
    check(hairpin_tokens[i] == 'E' && hairpin_tokens[j] == 'E',
          "hairpin strands: " + hairpin_tokens);

  ProteinChain kink = load_fixture("kink");
  check(testing::oracle_bend_deg(kink, 4) > 70.0, "oracle: kink angle");
  check(testing::oracle_bend_deg(kink, 3) <= 70.0
            && testing::oracle_bend_deg(kink, 5) <= 70.0,
        "oracle: kink neighbours bent");
  std::string kink_tokens = token_string(assign_tokens(kink));
  check(kink_tokens[4] == 'S', "kink: " + kink_tokens);

  for (const std::string &p: problems)
    std::cerr << "  " << p << "\n";
  return { problems.empty(), "helix " + helix_tokens + ", hairpin "
                                 + hairpin_tokens + ", kink " + kink_tokens };
}

// 4. Rigid-motion invariance on the fixtures.
Outcome invariance() {
  int trials = 0, failures = 0;
  for (const std::string &name: testing::invariance_fixture_names()) {
    VerifyOptions opts;
    opts.trials = 100;
    opts.seed = 4004;
    opts.max_translation = 100.0;
    opts.allow_reflection = true;
    VerifyReport r = verify_invariance(load_fixture(name), opts);
    if (!r.reference_audit_ok) {
      std::cerr << "  " << name << ": reference violates the edge bound\n";
      ++failures;
    }
    for (const VerifyTrial &t: r.trials) {
      ++trials;
      if (!t.ok()) {
        ++failures;
        std::cerr << "  " << name << " trial " << t.index << ": " << t.detail
                  << "\n    motion " << motion_to_string(t.motion) << "\n";
      }
    }
  }
  return { failures == 0 && trials == 1000,
           std::to_string(trials) + " motions, " + std::to_string(failures)
               + " violations" };
}

// Sorted pairwise distances: an independent witness of non-congruence.
bool distance_profiles_differ(const std::vector<Vec3> &a,
                              const std::vector<Vec3> &b) {
  auto profile = [](const std::vector<Vec3> &p) {
    std::vector<double> d;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j)
        d.push_back(testing::dist(testing::to_p3(p[i]), testing::to_p3(p[j])));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (a.size() != b.size())
    return true;
  auto da = profile(a), db = profile(b);
  for (std::size_t k = 0; k < da.size(); ++k)
    if (std::abs(da[k] - db[k]) > 1e-3)
      return true;
  return false;
}

// 5. Distinguishing non-congruent chains, identifying rigid copies.
Outcome distinguishing() {
  std::mt19937_64 rng(5005);
  std::uniform_int_distribution<int> size(8, 30);
  HierarchyOptions opts;
  opts.schull.jitter = true;
  int pairs = 0, distinct = 0, skipped = 0;
  while (pairs < 200) {
    const int n = size(rng);
    const int m = size(rng);
    ProteinChain a = testing::random_chain(n, rng);
    ProteinChain b = testing::random_chain(m, rng);
    const auto ca = a.ca_coords(), cb = b.ca_coords();
    if (congruent(testing::backbone_cloud(a), testing::backbone_cloud(b), 1e-3)
        || !distance_profiles_differ(ca, cb)) {
      ++skipped;
      continue;
    }
    ++pairs;
    HierarchicalGraph ha = build_hierarchy(a, opts);
    HierarchicalGraph hb = build_hierarchy(b, opts);
    if (fingerprint(ha) != fingerprint(hb)) {
      ++distinct;
    } else {
      std::cerr << "  collision on pair " << pairs << "\n--- a\n"
                << fingerprint_preimage(ha) << "--- b\n"
                << fingerprint_preimage(hb);
    }
  }

  int copies_equal = 0;
  for (int trial = 0; trial < 200; ++trial) {
    ProteinChain a = testing::random_chain(size(rng), rng);
    RigidMotion g = random_rigid_motion(rng, 100.0, true);
    HierarchicalGraph ha = build_hierarchy(a, opts);
    HierarchicalGraph hb = build_hierarchy(apply_rigid(g, a), opts);
    if (fingerprint(ha) == fingerprint(hb)) {
      ++copies_equal;
    } else {
      std::cerr << "  rigid copy " << trial << " differs, motion "
                << motion_to_string(g) << "\n--- a\n"
                << fingerprint_preimage(ha) << "--- b\n"
                << fingerprint_preimage(hb);
    }
  }
  std::ostringstream os;
  os << distinct << "/200 non-congruent pairs distinct (" << skipped
     << " congruent draws skipped), " << copies_equal
     << "/200 rigid copies identical";
  return { distinct >= 199 && copies_equal == 200, os.str() };
}

// 6. Edge counts against the 10 A radius graph.
Outcome efficiency() {
  const double cutoff[] = { 10.0 };
  std::vector<StructureStats> rows;
  std::vector<std::string> problems;
  for (const auto &[name, unused]: testing::generate_fixtures()) {
    ProteinChain chain = load_fixture(name);
    if (chain.size() < 50)
      continue;
    HierarchicalGraph h = build_hierarchy(chain);
    auto ca = chain.ca_coords();
    StructureStats s = compute_stats(name, { &h, 1 }, ca, cutoff);
    if (s.radius_edges[0] != testing::oracle_radius_count(ca, 10.0))
      problems.push_back(name + ": radius count disagrees with the oracle");
    if (!(s.sshg_edges() < s.radius_edges[0]))
      problems.push_back(name + ": not sparser than the radius graph");
    rows.push_back(s);
  }
  if (rows.empty())
    problems.push_back("no fixture with at least 50 residues");
  StatsSummary sum = summarize(rows);
  const double mean = rows.empty() ? 0.0 : sum.mean_edge_ratio[0];
  if (!(mean > 2.0))
    problems.push_back("mean ratio not above 2");
  for (const std::string &p: problems)
    std::cerr << "  " << p << "\n";
  std::ostringstream os;
  os << rows.size() << " fixtures >= 50 residues, mean ratio@10 " << mean;
  for (const StructureStats &s: rows)
    os << ", " << s.source_id << " " << s.sshg_edges() << " vs "
       << s.radius_edges[0];
  return { problems.empty(), os.str() };
}

// 7. Frame equivariance.
Outcome frame_equivariance() {
  std::mt19937_64 rng(7007);
  std::uniform_int_distribution<int> size(5, 60);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  int violations = 0;
  double worst_orientation = 0, worst_center = 0;
  for (int c = 0; c < 100; ++c) {
    std::vector<Vec3> pts;
    const int n = size(rng);
    for (int i = 0; i < n; ++i)
      pts.emplace_back(coord(rng), coord(rng), coord(rng));
    const Frame f = compute_frame(pts);
    for (int m = 0; m < 100; ++m) {
      RigidMotion g = random_rigid_motion(rng, 100.0, true);
      std::vector<Vec3> moved;
      for (const Vec3 &p: pts)
        moved.push_back(g.apply(p));
      const Frame fm = compute_frame(moved);
      const double orient =
          (fm.orientation - g.rotation() * f.orientation).cwiseAbs().maxCoeff();
      const double center = (fm.center - g.apply(f.center)).norm();
      worst_orientation = std::max(worst_orientation, orient);
      worst_center = std::max(worst_center, center);
      if (!(orient < 1e-6) || !(center < 1e-9)) {
        ++violations;
        if (violations <= 5)
          std::cerr << "  cloud " << c << " motion " << m << ": orientation "
                    << orient << ", center " << center << "\n";
      }
    }
  }
  std::ostringstream os;
  os << "10000 checks, " << violations << " violations, worst orientation "
     << worst_orientation << ", worst center " << worst_center;
  return { violations == 0, os.str() };
}

// 8. Hydrogen-bond energy worked example.
Outcome energy_example() {
  const double r_on = 2.88, r_ch = 3.92, r_oh = 1.92, r_cn = 3.85;
  // O at the origin, N on +x, H between them, C fixed by the last two
  // distances.
  Residue acceptor, donor;
  acceptor.o = Vec3(0, 0, 0);
  donor.n = Vec3(r_on, 0, 0);
  donor.h = Vec3(r_oh, 0, 0);
  const double x = (r_ch * r_ch - r_cn * r_cn + r_on * r_on - r_oh * r_oh)
                   / (2 * (r_on - r_oh));
  acceptor.c = Vec3(x, std::sqrt(r_ch * r_ch - (x - r_oh) * (x - r_oh)), 0);

  const double expected = testing::oracle_energy(r_on, r_ch, r_oh, r_cn);
  const double got = hbond_energy(donor, acceptor);
  char buf[128];
  std::snprintf(buf, sizeof(buf), "energy %.6f, oracle %.6f kcal/mol", got,
                expected);
  return { std::abs(got - expected) < 1e-3 && std::abs(expected + 4.97) < 0.01,
           buf };
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>>
      criteria {
        { "schull sparse and connected", schull_sparse_connected },
        { "hierarchy edge bound", edge_bound },
        { "dssp fixtures", dssp_fixtures },
        { "rigid motion invariance", invariance },
        { "distinguishing power", distinguishing },
        { "sparser than radius graph", efficiency },
        { "frame equivariance", frame_equivariance },
        { "hydrogen bond energy", energy_example },
      };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception &e) {
      o = { false, std::string("exception: ") + e.what() };
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << (k + 1) << "] "
              << criteria[k].first << ": " << o.summary << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
