//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SSHG_ERROR_H_
#define SSHG_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sshg {

enum class ErrorKind {
  kInvalidArgument,
  kCoincidentPoints,
  kDegeneratePoint,
  kDegenerateConfiguration,
  kDuplicateDirection,
  kMalformedRecord,
  kEmptyStructure,
  kIoError,
  kAtomClash,
  kOverflow,
  kSchemaError,
};

std::string_view error_kind_name(ErrorKind kind);

// True for the geometric failures that the optional jitter can repair.
constexpr bool is_degeneracy(ErrorKind kind) {
  return kind == ErrorKind::kDegeneratePoint
         || kind == ErrorKind::kDegenerateConfiguration
         || kind == ErrorKind::kDuplicateDirection;
}

class Error: public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) { }

  ErrorKind kind() const noexcept { return kind_; }

  // Same kind, message prefixed with where in the pipeline it happened.
  Error with_context(std::string_view context) const {
    Error e(*this);
    static_cast<std::runtime_error &>(e) =
        std::runtime_error(std::string(context) + ": " + what());
    return e;
  }

private:
  ErrorKind kind_;
};

}  // namespace sshg

#endif  // SSHG_ERROR_H_
