//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "sshg/dssp.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "sshg/error.h"

namespace sshg {

namespace {
constexpr std::string_view kTokenChars = "HBEGIPTS-";
// 0.084 * 332
constexpr double kEnergyScale = 27.888;
constexpr double kClashDistance = 0.01;
}  // namespace

char token_char(SSToken t) {
  return kTokenChars[static_cast<int>(t)];
}

std::optional<SSToken> token_from_char(char c) {
  std::size_t pos = kTokenChars.find(c);
  if (pos == std::string_view::npos)
    return std::nullopt;
  return static_cast<SSToken>(pos);
}

std::string token_string(std::span<const SSToken> tokens) {
  std::string s;
  s.reserve(tokens.size());
  for (SSToken t: tokens)
    s.push_back(token_char(t));
  return s;
}

std::vector<SSToken> parse_tokens(std::string_view text) {
  std::vector<SSToken> out;
  out.reserve(text.size());
  for (char c: text) {
    auto t = token_from_char(c);
    if (!t) {
      throw Error(ErrorKind::kInvalidArgument,
                  std::string("unknown token '") + c + "'");
    }
    out.push_back(*t);
  }
  return out;
}

// ---------------------------------------------------------------------------

ChainBreaks::ChainBreaks(const ProteinChain &chain) {
  const auto &res = chain.residues;
  after_.assign(res.size(), false);
  for (std::size_t i = 0; i + 1 < res.size(); ++i)
    after_[i] = (res[i].c - res[i + 1].n).norm() >= kPeptideBondMax;
}

bool ChainBreaks::spans(int lo, int hi) const {
  for (int k = std::max(lo, 0);
       k < hi && k < static_cast<int>(after_.size()); ++k) {
    if (after_[k])
      return true;
  }
  return false;
}

bool ChainBreaks::any() const {
  return std::find(after_.begin(), after_.end(), true) != after_.end();
}

HBondSet::HBondSet(std::span<const HBond> bonds, int residue_count)
    : n_(residue_count), amides_of_(residue_count) {
  for (const HBond &b: bonds) {
    if (b.acceptor < 0 || b.acceptor >= n_ || b.donor < 0 || b.donor >= n_)
      throw Error(ErrorKind::kInvalidArgument, "hydrogen bond out of range");
    amides_of_[b.acceptor].push_back(b.donor);
  }
  for (auto &v: amides_of_)
    std::sort(v.begin(), v.end());
}

bool HBondSet::bonded(int carbonyl, int amide) const {
  if (carbonyl < 0 || carbonyl >= n_ || amide < 0 || amide >= n_)
    return false;
  const auto &v = amides_of_[carbonyl];
  return std::binary_search(v.begin(), v.end(), amide);
}

// ---------------------------------------------------------------------------

double hbond_energy(const Residue &donor, const Residue &acceptor) {
  if (!donor.h)
    throw Error(ErrorKind::kInvalidArgument, "donor has no hydrogen");
  const Vec3 &n = donor.n, &h = *donor.h;
  const Vec3 &c = acceptor.c, &o = acceptor.o;

  double r_on = (o - n).norm();
  double r_ch = (c - h).norm();
  double r_oh = (o - h).norm();
  double r_cn = (c - n).norm();
  if (std::min({ r_on, r_ch, r_oh, r_cn }) <= kClashDistance) {
    throw Error(ErrorKind::kAtomClash,
                "residues " + std::to_string(donor.seq_index) + " and "
                    + std::to_string(acceptor.seq_index) + " overlap");
  }
  return kEnergyScale * (1 / r_on + 1 / r_ch - 1 / r_oh - 1 / r_cn);
}

std::vector<HBond> detect_hbonds(const ProteinChain &chain,
                                 double threshold) {
  const auto &res = chain.residues;
  const int n = static_cast<int>(res.size());

  // |E| <= 2 * scale * |NH| / m^2 where m = r(ON) - |CO| - |NH| bounds all
  // four distances from below, so pairs with r(ON) beyond the cutoff cannot
  // reach the threshold.
  double cutoff2 = std::numeric_limits<double>::infinity();
  if (threshold < 0) {
    double max_nh = 0, max_co = 0;
    for (const Residue &r: res) {
      max_co = std::max(max_co, (r.c - r.o).norm());
      if (r.h)
        max_nh = std::max(max_nh, (*r.h - r.n).norm());
    }
    double cutoff = std::sqrt(2 * kEnergyScale * max_nh / -threshold)
                    + max_nh + max_co + 1e-6;
    cutoff2 = cutoff * cutoff;
  }

  std::vector<HBond> bonds;
  for (int acc = 0; acc < n; ++acc) {
    for (int don = 0; don < n; ++don) {
      if (std::abs(acc - don) < 2 || !res[don].h)
        continue;
      if ((res[acc].o - res[don].n).squaredNorm() > cutoff2)
        continue;
      double e;
      try {
        e = hbond_energy(res[don], res[acc]);
      } catch (const Error &) {
        continue;
      }
      if (e < threshold)
        bonds.push_back({ don, acc, e });
    }
  }
  return bonds;
}

TurnFlags detect_turns(const HBondSet &hbonds, const ChainBreaks &breaks) {
  TurnFlags turns(hbonds.residue_count());
  for (int i = 0; i < hbonds.residue_count(); ++i) {
    for (int n = 3; n <= 5; ++n) {
      if (hbonds.bonded(i, i + n) && !breaks.spans(i, i + n))
        turns.set(i, n);
    }
  }
  return turns;
}

std::vector<Bridge> detect_bridges(const HBondSet &hb,
                                   const ChainBreaks &breaks) {
  const int n = hb.residue_count();
  std::vector<Bridge> bridges;
  for (int i = 1; i + 1 < n; ++i) {
    if (breaks.spans(i - 1, i + 1))
      continue;
    for (int j = i + 3; j + 1 < n; ++j) {
      if (breaks.spans(j - 1, j + 1))
        continue;
      bool parallel = (hb.bonded(i - 1, j) && hb.bonded(j, i + 1))
                      || (hb.bonded(j - 1, i) && hb.bonded(i, j + 1));
      bool antiparallel = (hb.bonded(i, j) && hb.bonded(j, i))
                          || (hb.bonded(i - 1, j + 1)
                              && hb.bonded(j - 1, i + 1));
      if (parallel)
        bridges.push_back({ i, j, BridgeKind::kParallel });
      if (antiparallel)
        bridges.push_back({ i, j, BridgeKind::kAntiparallel });
    }
  }
  return bridges;
}

double bend_angle(const ProteinChain &chain, int i) {
  const auto &res = chain.residues;
  if (i < 2 || i + 2 >= static_cast<int>(res.size()))
    throw Error(ErrorKind::kInvalidArgument, "bend window out of range");
  Vec3 a = res[i].ca - res[i - 2].ca;
  Vec3 b = res[i + 2].ca - res[i].ca;
  double cosine = a.dot(b) / (a.norm() * b.norm());
  cosine = std::clamp(cosine, -1.0, 1.0);
  return std::acos(cosine) * 180.0 / std::numbers::pi;
}

namespace {

int find_root(std::vector<int> &parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void unite(std::vector<int> &parent, int a, int b) {
  a = find_root(parent, a);
  b = find_root(parent, b);
  if (a != b)
    parent[std::max(a, b)] = std::min(a, b);
}

}  // namespace

std::vector<ResidueStructure> detect_structures(
    const ProteinChain &chain, const TurnFlags &turns,
    std::span<const Bridge> bridges, const ChainBreaks &breaks) {
  const int n = static_cast<int>(chain.size());
  std::vector<ResidueStructure> out(n);

  for (int len = 3; len <= 5; ++len) {
    for (int i = 1; i + len <= n; ++i) {
      if (turns.at(i - 1, len) && turns.at(i, len)) {
        for (int k = i; k < i + len; ++k)
          out[k].helix[len - 3] = true;
      }
    }
    for (int i = 0; i < n; ++i) {
      if (!turns.at(i, len))
        continue;
      for (int k = i + 1; k < i + len && k < n; ++k)
        out[k].turn = true;
    }
  }

  // Ladders: runs of bridges of one kind stepping (i+1, j+1) when parallel
  // and (i+1, j-1) when antiparallel.
  const int nb = static_cast<int>(bridges.size());
  std::vector<int> ladder(nb);
  std::iota(ladder.begin(), ladder.end(), 0);
  for (int a = 0; a < nb; ++a) {
    for (int b = 0; b < nb; ++b) {
      const Bridge &x = bridges[a], &y = bridges[b];
      if (x.kind != y.kind || y.i != x.i + 1)
        continue;
      int step = x.kind == BridgeKind::kParallel ? 1 : -1;
      if (y.j == x.j + step)
        unite(ladder, a, b);
    }
  }
  std::vector<int> ladder_size(nb, 0);
  for (int a = 0; a < nb; ++a)
    ++ladder_size[find_root(ladder, a)];
  for (int a = 0; a < nb; ++a) {
    bool in_ladder = ladder_size[find_root(ladder, a)] >= 2;
    for (int r: { bridges[a].i, bridges[a].j }) {
      if (in_ladder)
        out[r].ladder = true;
      else
        out[r].isolated_bridge = true;
    }
  }

  // Sheets: ladders joined through shared residues.
  std::vector<int> sheet(nb);
  for (int a = 0; a < nb; ++a)
    sheet[a] = find_root(ladder, a);
  std::vector<int> owner(n, -1);
  for (int a = 0; a < nb; ++a) {
    for (int r: { bridges[a].i, bridges[a].j }) {
      if (owner[r] >= 0)
        unite(sheet, owner[r], a);
      else
        owner[r] = a;
    }
  }
  std::vector<int> label(nb, -1);
  int next_label = 0;
  for (int r = 0; r < n; ++r) {
    if (owner[r] < 0)
      continue;
    int root = find_root(sheet, owner[r]);
    if (label[root] < 0)
      label[root] = next_label++;
    out[r].sheet = label[root];
  }

  for (int i = 2; i + 2 < n; ++i) {
    if (breaks.spans(i - 2, i + 2))
      continue;
    Vec3 a = chain.residues[i].ca - chain.residues[i - 2].ca;
    Vec3 b = chain.residues[i + 2].ca - chain.residues[i].ca;
    if (a.norm() <= kGeomEpsilon || b.norm() <= kGeomEpsilon)
      continue;
    out[i].bend = bend_angle(chain, i) > kBendThresholdDeg;
  }
  return out;
}

std::vector<SSToken> assign_tokens(std::span<const ResidueStructure> flags) {
  std::vector<SSToken> tokens;
  tokens.reserve(flags.size());
  for (const ResidueStructure &f: flags) {
    SSToken t = SSToken::kNone;
    if (f.helix[1])
      t = SSToken::kH;
    else if (f.isolated_bridge)
      t = SSToken::kB;
    else if (f.ladder)
      t = SSToken::kE;
    else if (f.helix[0])
      t = SSToken::kG;
    else if (f.helix[2])
      t = SSToken::kI;
    else if (f.turn)
      t = SSToken::kT;
    else if (f.bend)
      t = SSToken::kS;
    tokens.push_back(t);
  }
  return tokens;
}

DsspResult run_dssp(const ProteinChain &chain, double threshold) {
  bool has_h = std::any_of(chain.residues.begin(), chain.residues.end(),
                           [](const Residue &r) { return r.h.has_value(); });
  const ProteinChain &input = chain;
  ProteinChain with_h;
  if (!has_h)
    with_h = estimate_hydrogens(chain);
  const ProteinChain &c = has_h ? input : with_h;

  DsspResult result;
  result.breaks = ChainBreaks(c);
  result.hbonds = detect_hbonds(c, threshold);
  HBondSet set(result.hbonds, static_cast<int>(c.size()));
  TurnFlags turns = detect_turns(set, result.breaks);
  result.bridges = detect_bridges(set, result.breaks);
  result.structures =
      detect_structures(c, turns, result.bridges, result.breaks);
  result.tokens = assign_tokens(result.structures);
  return result;
}

std::vector<SSToken> assign_tokens(const ProteinChain &chain) {
  return run_dssp(chain).tokens;
}

std::vector<Segment> segment(std::span<const SSToken> tokens) {
  return segment(tokens, ChainBreaks());
}

std::vector<Segment> segment(std::span<const SSToken> tokens,
                             const ChainBreaks &breaks) {
  if (tokens.empty())
    throw Error(ErrorKind::kInvalidArgument, "cannot segment empty tokens");
  std::vector<Segment> out;
  int start = 0;
  const int n = static_cast<int>(tokens.size());
  for (int i = 1; i <= n; ++i) {
    if (i == n || tokens[i] != tokens[start] || breaks.after(i - 1)) {
      out.push_back({ start, i - 1, tokens[start] });
      start = i;
    }
  }
  return out;
}

}  // namespace sshg
