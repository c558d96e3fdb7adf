//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SSHG_PDBIO_H_
#define SSHG_PDBIO_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sshg/geometry.h"

namespace sshg {

/// Backbone-only residue. seq_index is the 0-based position in its chain;
/// the author numbering is kept only so records can be written back.
struct Residue {
  int seq_index = 0;
  char chain_id = ' ';
  std::string aa_type;  // 3-letter code
  Vec3 n = Vec3::Zero();
  Vec3 ca = Vec3::Zero();
  Vec3 c = Vec3::Zero();
  Vec3 o = Vec3::Zero();
  std::optional<Vec3> h;

  int author_seq = 0;
  char insertion_code = ' ';
};

struct ProteinChain {
  std::vector<Residue> residues;
  std::string source_id;

  std::size_t size() const { return residues.size(); }
  char chain_id() const {
    return residues.empty() ? ' ' : residues.front().chain_id;
  }
  std::vector<Vec3> ca_coords() const;
};

struct PdbParseResult {
  std::vector<ProteinChain> chains;
  int dropped_residues = 0;       // residues without a full N/CA/C/O set
  std::vector<std::string> warnings;
};

/// Reads ATOM records (first model only, altLoc blank or 'A'). Chains come out
/// in order of first appearance and residues in file order, renumbered from
/// zero. Throws kMalformedRecord with the line number when a coordinate field
/// does not parse and kEmptyStructure when no complete residue is found.
PdbParseResult parse_pdb(std::istream &in, std::string source_id);
PdbParseResult parse_pdb(std::string_view text, std::string source_id);

/// Reads a file, or standard input when path is "-". Throws kIoError if the
/// file cannot be opened.
PdbParseResult parse_pdb_file(const std::string &path);

/// ATOM records for the backbone atoms of every residue, one TER per chain
/// and a final END.
std::string write_pdb(std::span<const ProteinChain> chains);

/// Places amide hydrogens 1.0 A from N along the previous residue's O->C
/// direction. The first residue and prolines get none.
ProteinChain estimate_hydrogens(ProteinChain chain);

/// Applies m to every backbone atom and re-estimates hydrogens.
ProteinChain apply_rigid(const RigidMotion &m, const ProteinChain &chain);

/// Stable integer code for a residue name, distinct for distinct names.
std::int64_t residue_code(std::string_view aa_type);

}  // namespace sshg

#endif  // SSHG_PDBIO_H_
