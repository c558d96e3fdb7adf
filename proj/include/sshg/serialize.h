//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SSHG_SERIALIZE_H_
#define SSHG_SERIALIZE_H_

#include <string>

#include "json.hpp"

#include "sshg/hierarchy.h"
#include "sshg/wlref.h"

namespace sshg {

inline constexpr const char *kToolVersion = "0.1.0";

struct BuildMeta {
  bool jitter_enabled = false;
  QuantConfig quant;
};

/// x rounded to 9 significant decimal digits.
double round_sig9(double x);

/// Interchange document with keys meta, segments, intra, inter, audit.
/// Reals carry 9 significant digits; rel_orientation is 9 reals in row-major
/// order. Intra entries also carry their frame so the reader can rebuild the
/// hierarchy without the source coordinates.
nlohmann::ordered_json to_json(const HierarchicalGraph &h,
                               const BuildMeta &meta = {});

/// Inverse of to_json. Inter node attributes and all node feature codes are
/// recomputed from the stored values. Throws kSchemaError on malformed input.
HierarchicalGraph hierarchy_from_json(const nlohmann::ordered_json &doc);

}  // namespace sshg

#endif  // SSHG_SERIALIZE_H_
