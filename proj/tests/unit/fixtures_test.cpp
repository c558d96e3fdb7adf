//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

// Checks that the frozen PDB files in tests/data still describe sane
// backbones and still match the builders that produced them.

#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.h"
#include "sshg/dssp.h"
#include "sshg/pdbio.h"
#include "synth.h"

namespace sshg {
namespace {

using testing::P3;
using testing::dist;
using testing::to_p3;

TEST(Fixtures, FrozenFilesMatchBuilders) {
  for (const auto &[name, generated]: testing::generate_fixtures()) {
    // The random walks depend on the standard library's distributions, so
    // only the analytic builders are compared coordinate by coordinate.
    const bool analytic = name.find("random") == std::string::npos
                          && name.find("compact") == std::string::npos
                          && name != "fourteen";
    ProteinChain frozen = testing::load_fixture(name);
    ASSERT_EQ(frozen.size(), generated.size()) << name;
    if (!analytic)
      continue;
    for (std::size_t i = 0; i < frozen.size(); ++i) {
      const Residue &a = frozen.residues[i];
      const Residue &b = generated.residues[i];
      EXPECT_EQ(a.aa_type, b.aa_type) << name << " " << i;
      EXPECT_LT((a.ca - b.ca).norm(), 2e-3) << name << " " << i;
      EXPECT_LT((a.o - b.o).norm(), 2e-3) << name << " " << i;
    }
  }
}

TEST(Fixtures, CarryRemark) {
  for (const std::string &name: { "helix12", "compact90", "kink" }) {
    std::ifstream in(testing::fixture_path(name));
    std::string first;
    std::getline(in, first);
    EXPECT_EQ(first.rfind("REMARK", 0), 0U) << name;
  }
}

TEST(Fixtures, BackboneGeometryIsPlausible) {
  for (const auto &[name, unused]: testing::generate_fixtures()) {
    ProteinChain chain = testing::load_fixture(name);
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const Residue &r = chain.residues[i];
      EXPECT_NEAR(dist(to_p3(r.n), to_p3(r.ca)), 1.46, 0.1) << name << i;
      EXPECT_NEAR(dist(to_p3(r.c), to_p3(r.o)), 1.23, 0.05) << name << i;
      if (i + 1 < chain.size()) {
        const double peptide =
            dist(to_p3(r.c), to_p3(chain.residues[i + 1].n));
        EXPECT_NEAR(peptide, 1.33, 0.05) << name << " " << i;
      }
    }
    // No two CAs from non-adjacent residues closer than 3.6 A.
    for (std::size_t i = 0; i < chain.size(); ++i)
      for (std::size_t j = i + 2; j < chain.size(); ++j)
        EXPECT_GT(dist(to_p3(chain.residues[i].ca),
                       to_p3(chain.residues[j].ca)),
                  3.6)
            << name << " " << i << " " << j;
  }
}

TEST(Fixtures, HelixHydrogenBondsAreStrong) {
  ProteinChain helix = estimate_hydrogens(testing::load_fixture("helix24"));
  for (int i = 0; i + 4 < 24; ++i) {
    const Residue &acc = helix.residues[i];
    const Residue &don = helix.residues[i + 4];
    const double e = testing::oracle_energy(to_p3(acc.o), to_p3(acc.c),
                                            to_p3(don.n), to_p3(*don.h));
    EXPECT_LT(e, -1.0) << i;
    EXPECT_GT(e, -5.0) << i;
  }
}

TEST(Fixtures, HairpinRegisterHasBothBonds) {
  ProteinChain hairpin = estimate_hydrogens(testing::load_fixture("hairpin"));
  auto bonds = testing::oracle_hbonds(hairpin);
  int paired = 0;
  for (int i = 1; i <= 6; ++i)
    if (bonds.count({ i, 15 - i }) && bonds.count({ 15 - i, i }))
      ++paired;
  EXPECT_GE(paired, 2);
}

}  // namespace
}  // namespace sshg
