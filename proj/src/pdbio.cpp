//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "sshg/pdbio.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sshg/error.h"

namespace sshg {

std::vector<Vec3> ProteinChain::ca_coords() const {
  std::vector<Vec3> out;
  out.reserve(residues.size());
  for (const Residue &r: residues)
    out.push_back(r.ca);
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty()
         && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

// 1-based inclusive column range, clipped to the line.
std::string_view columns(std::string_view line, std::size_t first,
                         std::size_t last) {
  if (line.size() < first)
    return {};
  return line.substr(first - 1, std::min(last, line.size()) - first + 1);
}

double parse_coordinate(std::string_view line, std::size_t first,
                        std::size_t last, int line_no) {
  std::string_view field = trim(columns(line, first, last));
  double value = 0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc()
      || ptr != field.data() + field.size()) {
    throw Error(ErrorKind::kMalformedRecord,
                "line " + std::to_string(line_no) + ": bad coordinate field '"
                    + std::string(field) + "'");
  }
  return value;
}

struct PendingResidue {
  char chain_id = ' ';
  std::string res_seq;
  char icode = ' ';
  std::string res_name;
  std::optional<Vec3> n {}, ca {}, c {}, o {};

  bool same_key(char ch, std::string_view seq, char ic,
                std::string_view name) const {
    return chain_id == ch && res_seq == seq && icode == ic
           && res_name == name;
  }
};

struct ChainBuilder {
  char chain_id = ' ';
  std::vector<Residue> residues;
};

}  // namespace

PdbParseResult parse_pdb(std::istream &in, std::string source_id) {
  PdbParseResult result;
  std::vector<ChainBuilder> chains;
  std::optional<PendingResidue> pending;

  auto flush = [&]() {
    if (!pending)
      return;
    PendingResidue &p = *pending;
    if (!(p.n && p.ca && p.c && p.o)) {
      ++result.dropped_residues;
      result.warnings.push_back("incomplete backbone: chain "
                                + std::string(1, p.chain_id) + " residue "
                                + p.res_name + " " + p.res_seq);
    } else {
      auto it = std::find_if(chains.begin(), chains.end(),
                             [&](const ChainBuilder &cb) {
                               return cb.chain_id == p.chain_id;
                             });
      if (it == chains.end()) {
        chains.push_back({ p.chain_id, {} });
        it = std::prev(chains.end());
      }
      Residue r;
      r.seq_index = static_cast<int>(it->residues.size());
      r.chain_id = p.chain_id;
      r.aa_type = p.res_name;
      r.n = *p.n;
      r.ca = *p.ca;
      r.c = *p.c;
      r.o = *p.o;
      std::from_chars(p.res_seq.data(), p.res_seq.data() + p.res_seq.size(),
                      r.author_seq);
      r.insertion_code = p.icode;
      it->residues.push_back(std::move(r));
    }
    pending.reset();
  };

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (line.starts_with("ENDMDL"))
      break;
    if (!line.starts_with("ATOM  "))
      continue;
    if (line.size() < 54) {
      throw Error(ErrorKind::kMalformedRecord,
                  "line " + std::to_string(line_no)
                      + ": ATOM record shorter than 54 columns");
    }

    char alt_loc = line[16];
    if (alt_loc != ' ' && alt_loc != 'A')
      continue;

    std::string_view atom_name = trim(columns(line, 13, 16));
    std::string_view res_name = trim(columns(line, 18, 20));
    char chain_id = line[21];
    std::string_view res_seq = trim(columns(line, 23, 26));
    char icode = line[26];

    Vec3 xyz(parse_coordinate(line, 31, 38, line_no),
             parse_coordinate(line, 39, 46, line_no),
             parse_coordinate(line, 47, 54, line_no));

    if (!pending || !pending->same_key(chain_id, res_seq, icode, res_name)) {
      flush();
      pending.emplace();
      pending->chain_id = chain_id;
      pending->res_seq = std::string(res_seq);
      pending->icode = icode;
      pending->res_name = std::string(res_name);
    }

    std::optional<Vec3> *slot = nullptr;
    if (atom_name == "N")
      slot = &pending->n;
    else if (atom_name == "CA")
      slot = &pending->ca;
    else if (atom_name == "C")
      slot = &pending->c;
    else if (atom_name == "O")
      slot = &pending->o;
    if (slot != nullptr && !slot->has_value())
      *slot = xyz;
  }
  flush();

  for (ChainBuilder &cb: chains) {
    ProteinChain chain;
    chain.residues = std::move(cb.residues);
    chain.source_id = source_id;
    for (std::size_t i = 0; i + 1 < chain.residues.size(); ++i) {
      double gap = (chain.residues[i].c - chain.residues[i + 1].n).norm();
      if (gap >= 2.5) {
        result.warnings.push_back(
            "chain " + std::string(1, cb.chain_id) + ": C-N distance "
            + std::to_string(gap) + " after residue " + std::to_string(i));
      }
    }
    result.chains.push_back(std::move(chain));
  }

  if (result.chains.empty()) {
    throw Error(ErrorKind::kEmptyStructure,
                "no residue with a complete backbone in " + source_id);
  }
  return result;
}

PdbParseResult parse_pdb(std::string_view text, std::string source_id) {
  std::istringstream in { std::string(text) };
  return parse_pdb(in, std::move(source_id));
}

PdbParseResult parse_pdb_file(const std::string &path) {
  if (path == "-")
    return parse_pdb(std::cin, "stdin");
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::kIoError, "cannot open " + path);
  return parse_pdb(in, path);
}

std::string write_pdb(std::span<const ProteinChain> chains) {
  std::string out;
  char buf[96];
  int serial = 1;
  for (const ProteinChain &chain: chains) {
    for (const Residue &r: chain.residues) {
      const std::pair<const char *, const Vec3 *> atoms[] = {
        { " N  ", &r.n }, { " CA ", &r.ca }, { " C  ", &r.c }, { " O  ", &r.o }
      };
      for (auto [name, pos]: atoms) {
        std::snprintf(buf, sizeof(buf),
                      "ATOM  %5d %4s %3s %c%4d%c   %8.3f%8.3f%8.3f%6.2f%6.2f"
                      "           %c  \n",
                      serial % 100000, name, r.aa_type.c_str(), r.chain_id,
                      r.author_seq, r.insertion_code, pos->x(), pos->y(),
                      pos->z(), 1.0, 0.0, name[1]);
        out += buf;
        ++serial;
      }
    }
    out += "TER\n";
  }
  out += "END\n";
  return out;
}

ProteinChain estimate_hydrogens(ProteinChain chain) {
  std::vector<Residue> &res = chain.residues;
  for (std::size_t i = 0; i < res.size(); ++i) {
    res[i].h.reset();
    if (i == 0 || res[i].aa_type == "PRO")
      continue;
    Vec3 co = res[i - 1].c - res[i - 1].o;
    double len = co.norm();
    if (len <= kGeomEpsilon)
      continue;
    res[i].h = res[i].n + co / len;
  }
  return chain;
}

ProteinChain apply_rigid(const RigidMotion &m, const ProteinChain &chain) {
  ProteinChain moved = chain;
  for (Residue &r: moved.residues) {
    r.n = m.apply(r.n);
    r.ca = m.apply(r.ca);
    r.c = m.apply(r.c);
    r.o = m.apply(r.o);
  }
  return estimate_hydrogens(std::move(moved));
}

std::int64_t residue_code(std::string_view aa_type) {
  std::int64_t code = 0;
  for (char ch: aa_type.substr(0, 7))
    code = (code << 8) | static_cast<unsigned char>(ch);
  return code;
}

}  // namespace sshg
