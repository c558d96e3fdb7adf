//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "sshg/error.h"

namespace sshg {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::kInvalidArgument:
    return "InvalidArgument";
  case ErrorKind::kCoincidentPoints:
    return "CoincidentPoints";
  case ErrorKind::kDegeneratePoint:
    return "DegeneratePoint";
  case ErrorKind::kDegenerateConfiguration:
    return "DegenerateConfiguration";
  case ErrorKind::kDuplicateDirection:
    return "DuplicateDirection";
  case ErrorKind::kMalformedRecord:
    return "MalformedRecord";
  case ErrorKind::kEmptyStructure:
    return "EmptyStructure";
  case ErrorKind::kIoError:
    return "IoError";
  case ErrorKind::kAtomClash:
    return "AtomClash";
  case ErrorKind::kOverflow:
    return "Overflow";
  case ErrorKind::kSchemaError:
    return "SchemaError";
  }
  return "Unknown";
}

}  // namespace sshg
