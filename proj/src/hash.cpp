//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "sshg/hash.h"

#include <cstdio>

namespace sshg {
namespace {

constexpr std::uint64_t rotl64(std::uint64_t x, int r) {
  return (x << r) | (x >> (64 - r));
}

constexpr std::uint64_t fmix64(std::uint64_t k) {
  k ^= k >> 33;
  k *= 0xff51afd7ed558ccdULL;
  k ^= k >> 33;
  k *= 0xc4ceb9fe1a85ec53ULL;
  k ^= k >> 33;
  return k;
}

std::uint64_t load_le64(const std::uint8_t *p) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i)
    v = (v << 8) | p[i];
  return v;
}

}  // namespace

std::string Hash128::hex() const {
  char buf[33];
  std::snprintf(buf, sizeof(buf), "%016llx%016llx",
                static_cast<unsigned long long>(hi),
                static_cast<unsigned long long>(lo));
  return buf;
}

Hash128 murmur3_128(std::span<const std::uint8_t> data, std::uint32_t seed) {
  const std::size_t len = data.size();
  const std::size_t nblocks = len / 16;
  const std::uint8_t *bytes = data.data();

  std::uint64_t h1 = seed, h2 = seed;
  constexpr std::uint64_t c1 = 0x87c37b91114253d5ULL;
  constexpr std::uint64_t c2 = 0x4cf5ad432745937fULL;

  for (std::size_t i = 0; i < nblocks; ++i) {
    std::uint64_t k1 = load_le64(bytes + 16 * i);
    std::uint64_t k2 = load_le64(bytes + 16 * i + 8);

    k1 *= c1;
    k1 = rotl64(k1, 31);
    k1 *= c2;
    h1 ^= k1;
    h1 = rotl64(h1, 27);
    h1 += h2;
    h1 = h1 * 5 + 0x52dce729;

    k2 *= c2;
    k2 = rotl64(k2, 33);
    k2 *= c1;
    h2 ^= k2;
    h2 = rotl64(h2, 31);
    h2 += h1;
    h2 = h2 * 5 + 0x38495ab5;
  }

  const std::uint8_t *tail = bytes + 16 * nblocks;
  std::uint64_t k1 = 0, k2 = 0;
  switch (len & 15) {
  case 15: k2 ^= std::uint64_t(tail[14]) << 48; [[fallthrough]];
  case 14: k2 ^= std::uint64_t(tail[13]) << 40; [[fallthrough]];
  case 13: k2 ^= std::uint64_t(tail[12]) << 32; [[fallthrough]];
  case 12: k2 ^= std::uint64_t(tail[11]) << 24; [[fallthrough]];
  case 11: k2 ^= std::uint64_t(tail[10]) << 16; [[fallthrough]];
  case 10: k2 ^= std::uint64_t(tail[9]) << 8; [[fallthrough]];
  case 9:
    k2 ^= std::uint64_t(tail[8]);
    k2 *= c2;
    k2 = rotl64(k2, 33);
    k2 *= c1;
    h2 ^= k2;
    [[fallthrough]];
  case 8: k1 ^= std::uint64_t(tail[7]) << 56; [[fallthrough]];
  case 7: k1 ^= std::uint64_t(tail[6]) << 48; [[fallthrough]];
  case 6: k1 ^= std::uint64_t(tail[5]) << 40; [[fallthrough]];
  case 5: k1 ^= std::uint64_t(tail[4]) << 32; [[fallthrough]];
  case 4: k1 ^= std::uint64_t(tail[3]) << 24; [[fallthrough]];
  case 3: k1 ^= std::uint64_t(tail[2]) << 16; [[fallthrough]];
  case 2: k1 ^= std::uint64_t(tail[1]) << 8; [[fallthrough]];
  case 1:
    k1 ^= std::uint64_t(tail[0]);
    k1 *= c1;
    k1 = rotl64(k1, 31);
    k1 *= c2;
    h1 ^= k1;
  }

  h1 ^= len;
  h2 ^= len;
  h1 += h2;
  h2 += h1;
  h1 = fmix64(h1);
  h2 = fmix64(h2);
  h1 += h2;
  h2 += h1;

  // The reference writes h1 then h2; h1 is the leading word here.
  return { h1, h2 };
}

HashBuilder &HashBuilder::add(std::uint64_t v) {
  for (int i = 0; i < 8; ++i)
    bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  return *this;
}

HashBuilder &HashBuilder::add(std::int64_t v) {
  return add(static_cast<std::uint64_t>(v));
}

HashBuilder &HashBuilder::add_all(std::span<const Hash128> hs) {
  add(static_cast<std::uint64_t>(hs.size()));
  for (const Hash128 &h: hs)
    add(h);
  return *this;
}

}  // namespace sshg
