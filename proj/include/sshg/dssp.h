//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SSHG_DSSP_H_
#define SSHG_DSSP_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sshg/pdbio.h"

namespace sshg {

// Secondary-structure tokens. kP is part of the alphabet but no rule emits
// it.
enum class SSToken : std::uint8_t { kH, kB, kE, kG, kI, kP, kT, kS, kNone };

inline constexpr std::array<SSToken, 9> kAllTokens {
  SSToken::kH, SSToken::kB, SSToken::kE, SSToken::kG, SSToken::kI,
  SSToken::kP, SSToken::kT, SSToken::kS, SSToken::kNone,
};

char token_char(SSToken t);
std::optional<SSToken> token_from_char(char c);
std::string token_string(std::span<const SSToken> tokens);
/// Throws kInvalidArgument on a character outside "HBEGIPTS-".
std::vector<SSToken> parse_tokens(std::string_view text);

constexpr double kHBondThreshold = -0.5;       // kcal/mol
constexpr double kBendThresholdDeg = 70.0;
constexpr double kPeptideBondMax = 2.5;        // A, C(i)-N(i+1)

/// Backbone hydrogen bond: C=O of `acceptor` to N-H of `donor`.
struct HBond {
  int donor;
  int acceptor;
  double energy;  // kcal/mol
};

/// Positions where consecutive residues are not peptide bonded.
class ChainBreaks {
public:
  ChainBreaks() = default;
  explicit ChainBreaks(const ProteinChain &chain);

  /// True if residues i and i + 1 are separated by a break.
  bool after(int i) const {
    return i >= 0 && i < static_cast<int>(after_.size()) && after_[i];
  }
  /// True if any break lies between residues lo and hi (inclusive range).
  bool spans(int lo, int hi) const;
  bool any() const;

private:
  std::vector<bool> after_;
};

/// Membership test for Hbond(i, j) = C=O of i bonded to N-H of j.
class HBondSet {
public:
  HBondSet(std::span<const HBond> bonds, int residue_count);

  bool bonded(int carbonyl, int amide) const;
  int residue_count() const { return n_; }

private:
  int n_;
  std::vector<std::vector<int>> amides_of_;
};

/// 0.084 * 332 * (1/r(ON) + 1/r(CH) - 1/r(OH) - 1/r(CN)) with N, H from the
/// donor and C, O from the acceptor. Throws kInvalidArgument if the donor has
/// no hydrogen and kAtomClash if any of the four distances is <= 0.01 A.
double hbond_energy(const Residue &donor, const Residue &acceptor);

/// Every pair with |donor - acceptor| >= 2 whose energy is below threshold.
/// Donors without an estimated hydrogen are skipped; clashing pairs count as
/// unbonded. Sorted by (acceptor, donor).
std::vector<HBond> detect_hbonds(const ProteinChain &chain,
                                 double threshold = kHBondThreshold);

/// turn(i, n) for n in {3, 4, 5}: Hbond(i, i + n) with no break in between.
class TurnFlags {
public:
  explicit TurnFlags(int residue_count): flags_(residue_count) { }

  bool at(int i, int n) const {
    return i >= 0 && i < static_cast<int>(flags_.size()) && n >= 3 && n <= 5
           && flags_[i][n - 3];
  }
  void set(int i, int n) { flags_[i][n - 3] = true; }
  int residue_count() const { return static_cast<int>(flags_.size()); }

private:
  std::vector<std::array<bool, 3>> flags_;
};

TurnFlags detect_turns(const HBondSet &hbonds,
                       const ChainBreaks &breaks = {});

enum class BridgeKind { kParallel, kAntiparallel };

struct Bridge {
  int i;  // i < j
  int j;
  BridgeKind kind;

  bool operator==(const Bridge &) const = default;
};

/// Parallel:     [Hbond(i-1, j) and Hbond(j, i+1)] or
///               [Hbond(j-1, i) and Hbond(i, j+1)]
/// Antiparallel: [Hbond(i, j) and Hbond(j, i)] or
///               [Hbond(i-1, j+1) and Hbond(j-1, i+1)]
/// for |i - j| >= 3, with both three-residue stretches free of breaks.
std::vector<Bridge> detect_bridges(const HBondSet &hbonds,
                                   const ChainBreaks &breaks = {});

/// Candidate structures a residue takes part in, before prioritisation.
struct ResidueStructure {
  std::array<bool, 3> helix { false, false, false };  // 3-, 4-, 5-helix
  bool isolated_bridge = false;
  bool ladder = false;
  bool turn = false;
  bool bend = false;
  int sheet = -1;
};

std::vector<ResidueStructure> detect_structures(
    const ProteinChain &chain, const TurnFlags &turns,
    std::span<const Bridge> bridges, const ChainBreaks &breaks = {});

/// Bend angle at residue i in degrees: the angle between CA(i) - CA(i-2) and
/// CA(i+2) - CA(i). Requires 2 <= i <= N - 3.
double bend_angle(const ProteinChain &chain, int i);

/// Picks one token per residue in the order H, B, E, G, I, T, S; residues
/// with no structure get kNone.
std::vector<SSToken> assign_tokens(std::span<const ResidueStructure> flags);

struct DsspResult {
  std::vector<HBond> hbonds;
  std::vector<Bridge> bridges;
  std::vector<ResidueStructure> structures;
  std::vector<SSToken> tokens;
  ChainBreaks breaks;
};

/// Full assignment. Hydrogens are estimated here if none are present.
DsspResult run_dssp(const ProteinChain &chain,
                    double threshold = kHBondThreshold);
std::vector<SSToken> assign_tokens(const ProteinChain &chain);

/// Maximal run of equal tokens, inclusive bounds.
struct Segment {
  int start;
  int end;
  SSToken token;

  int size() const { return end - start + 1; }
  bool operator==(const Segment &) const = default;
};

std::vector<Segment> segment(std::span<const SSToken> tokens);
/// As above, additionally cutting runs at chain breaks.
std::vector<Segment> segment(std::span<const SSToken> tokens,
                             const ChainBreaks &breaks);

}  // namespace sshg

#endif  // SSHG_DSSP_H_
