//
// sshg - Copyright 2026 The sshg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "sshg/hash.h"

#include <cstring>
#include <set>
#include <string_view>

#include <gtest/gtest.h>

namespace sshg {
namespace {

Hash128 hash_text(std::string_view text, std::uint32_t seed) {
  return murmur3_128({ reinterpret_cast<const std::uint8_t *>(text.data()),
                       text.size() },
                     seed);
}

// Expected words come from the Python mmh3 package (hash64, unsigned),
// which wraps the reference C++ implementation.
struct Vector {
  std::string_view text;
  std::uint32_t seed;
  std::uint64_t h1;
  std::uint64_t h2;
};

constexpr Vector kVectors[] = {
  { "", 0, 0x0, 0x0 },
  { "", kHashSeed, 0x0a0f9d6c2d905297, 0x11cdcbe6f1fa5dbd },
  { "a", 0, 0x85555565f6597889, 0xe6b53a48510e895a },
  { "a", kHashSeed, 0x8eace86551367227, 0xdb0b8a41560e2869 },
  { "hello", 0, 0xcbd8a7b341bd9b02, 0x5b1e906a48ae1d19 },
  { "hello", kHashSeed, 0xe20ac2123d2739b5, 0x6b86ff8768319f78 },
  { "The quick brown fox jumps over the lazy dog", 0, 0xe34bbc7bbc071b6c,
    0x7a433ca9c49a9347 },
  { "The quick brown fox jumps over the lazy dog", kHashSeed,
    0x753716bcdf84dc3e, 0x49e225b8fb555b02 },
};

TEST(Murmur3, ReferenceVectors) {
  for (const Vector &v: kVectors) {
    Hash128 h = hash_text(v.text, v.seed);
    EXPECT_EQ(h.hi, v.h1) << "'" << v.text << "' seed " << v.seed;
    EXPECT_EQ(h.lo, v.h2) << "'" << v.text << "' seed " << v.seed;
  }
}

TEST(Murmur3, EveryTailLength) {
  // 0..32 exercises each tail length with and without a full block.
  std::uint8_t data[33];
  for (int i = 0; i < 33; ++i)
    data[i] = static_cast<std::uint8_t>(i);
  Hash128 h = murmur3_128({ data, 33 }, 0);
  EXPECT_EQ(h.hi, 0x7d41281bfaba4612ULL);
  EXPECT_EQ(h.lo, 0x55ac8073a7d6a30bULL);
  h = murmur3_128({ data, 33 }, kHashSeed);
  EXPECT_EQ(h.hi, 0x8af85c0413417f91ULL);
  EXPECT_EQ(h.lo, 0xe6b92b24d6994bc9ULL);

  std::set<Hash128> seen;
  for (std::size_t len = 0; len <= 33; ++len)
    seen.insert(murmur3_128({ data, len }));
  EXPECT_EQ(seen.size(), 34U);
}

TEST(Hash128Test, HexHighWordFirst) {
  Hash128 h { 0x0123456789abcdefULL, 0xfedcba9876543210ULL };
  EXPECT_EQ(h.hex(), "0123456789abcdeffedcba9876543210");
  EXPECT_EQ(Hash128 {}.hex(), std::string(32, '0'));
}

TEST(HashBuilderTest, LittleEndianWords) {
  HashBuilder b;
  b.add(std::int64_t { 1 }).add(std::uint64_t { 0x0102030405060708ULL });
  auto bytes = b.bytes();
  ASSERT_EQ(bytes.size(), 16U);
  EXPECT_EQ(bytes[0], 1);
  for (int i = 1; i < 8; ++i)
    EXPECT_EQ(bytes[i], 0);
  EXPECT_EQ(bytes[8], 0x08);
  EXPECT_EQ(bytes[15], 0x01);
  EXPECT_EQ(b.finish(), murmur3_128(bytes));
}

TEST(HashBuilderTest, NegativeValuesUseTwosComplement) {
  HashBuilder b;
  b.add(std::int64_t { -1 });
  for (std::uint8_t byte: b.bytes())
    EXPECT_EQ(byte, 0xff);
}

TEST(HashBuilderTest, ListsAreLengthPrefixed) {
  Hash128 x { 1, 2 }, y { 3, 4 };
  std::vector<Hash128> both { x, y }, first { x }, second { y };
  HashBuilder split;
  split.add_all(first).add_all(second);
  HashBuilder joined;
  joined.add_all(both);
  EXPECT_NE(split.finish(), joined.finish());

  HashBuilder empty_then_one;
  empty_then_one.add_all({}).add_all(first);
  HashBuilder one_then_empty;
  one_then_empty.add_all(first).add_all({});
  EXPECT_NE(empty_then_one.finish(), one_then_empty.finish());
}

TEST(HashBuilderTest, OrderMatters) {
  HashBuilder ab, ba;
  ab.add(std::int64_t { 7 }).add(std::int64_t { 9 });
  ba.add(std::int64_t { 9 }).add(std::int64_t { 7 });
  EXPECT_NE(ab.finish(), ba.finish());
}

}  // namespace
}  // namespace sshg
