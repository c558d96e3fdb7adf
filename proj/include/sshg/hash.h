//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SSHG_HASH_H_
#define SSHG_HASH_H_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sshg {

struct Hash128 {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  auto operator<=>(const Hash128 &) const = default;

  // 32 lowercase hex digits, hi word first.
  std::string hex() const;
};

// "SSHG" in ASCII. Written into every build so outputs can be replayed.
constexpr std::uint32_t kHashSeed = 0x53534847;

/// MurmurHash3 x64 128-bit variant, byte-for-byte the reference algorithm.
Hash128 murmur3_128(std::span<const std::uint8_t> data,
                    std::uint32_t seed = kHashSeed);

/// Accumulates little-endian 64-bit words and hashes them in one go. Every
/// value is written at a fixed width, so distinct word sequences are distinct
/// byte strings.
class HashBuilder {
public:
  HashBuilder &add(std::int64_t v);
  HashBuilder &add(std::uint64_t v);
  HashBuilder &add(const Hash128 &h) { return add(h.hi).add(h.lo); }
  HashBuilder &add_all(std::span<const Hash128> hs);

  std::span<const std::uint8_t> bytes() const { return bytes_; }
  Hash128 finish(std::uint32_t seed = kHashSeed) const {
    return murmur3_128(bytes_, seed);
  }

private:
  std::vector<std::uint8_t> bytes_;
};

}  // namespace sshg

#endif  // SSHG_HASH_H_
