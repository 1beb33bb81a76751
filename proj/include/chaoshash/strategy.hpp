// Copyright (c) 2026 The chaoshash authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "chaoshash/bitstring.hpp"

namespace chaoshash {

/// Seed bit material for the index generator. In the hash pipeline this is
/// the exclusive-or of D with the key chain and has the length of D; the
/// post-treatment seeds it directly from a key component.
struct SeedMaterial {
  BitString bits;
};

/// Finite sequence of component indices, each in [1, n], consumed one per
/// asynchronous iteration step. The hash pipeline uses length 2n.
struct Strategy {
  std::vector<std::uint32_t> indices;
  std::size_t n = 0;

  std::size_t size() const noexcept { return indices.size(); }
};

/// Key chain derivation: the 7-bit encoding of `key` is cyclically
/// extended to the length of `d` and combined with `d` by exclusive-or.
/// Throws on an empty key or a key with non-7-bit characters.
SeedMaterial derive_seed(const BitString& d, std::string_view key);

/// Same derivation from raw key bits instead of text.
SeedMaterial derive_seed_bits(const BitString& d, const BitString& key_bits);

/// Buffer-reusing overload for callers that are done with D.
SeedMaterial derive_seed_bits(BitString&& d, const BitString& key_bits);

/// Folds seed material into `state_bits` bits of generator state
/// (state_bits in {128, 192, 256}): the seed is split into state_bits-sized
/// chunks (the last one zero-padded on the right) which are XORed together.
/// Any resulting all-zero 32-bit word is replaced by a fixed non-zero
/// constant so no subgenerator can start from a degenerate state.
std::vector<std::uint32_t> condense_seed(const SeedMaterial& seed,
                                         std::size_t state_bits);

/// Deterministic 32-bit generator combining three xorshift-style
/// subgenerators; their outputs are mixed with XOR and addition. The exact
/// transition functions are the normative definition of this library's
/// index stream (see the repository README). State is 256 bits, seeded
/// through condense_seed; a 32-bit Weyl counter starts at zero.
class CombinedXorshift {
 public:
  static constexpr std::size_t kStateBits = 256;
  static constexpr std::size_t kStateWords = 8;

  /// Builds a generator from 8 condensed 32-bit state words.
  explicit CombinedXorshift(std::span<const std::uint32_t> state_words);

  /// Seeds from raw material: the state starts from
  /// condense_seed(seed, 256), then every 32-bit word of the seed stream
  /// is absorbed through absorb(). The fold alone is linear, so seed
  /// differences with a periodic structure (such as two key chains that
  /// differ in every bit) could cancel out of it; the absorb pass welds
  /// the full stream into the state nonlinearly.
  explicit CombinedXorshift(const SeedMaterial& seed);

  /// Injects one word into the state and advances the generator once.
  void absorb(std::uint32_t word);

  /// One combined 32-bit output word.
  std::uint32_t next_word();

  /// Draws one index uniformly from [1, n]. Each candidate consumes a
  /// 2n-bit number, i.e. ceil(2n/32) output words folded together by XOR;
  /// the folded word is accepted by rejection sampling over the largest
  /// multiple of n not exceeding 2^32, which keeps the mapping unbiased.
  std::uint32_t next_index(std::size_t n);

 private:
  std::uint64_t a_;
  std::uint32_t x_;
  std::uint32_t y_;
  std::uint32_t z_;
  std::uint32_t w_;
  std::uint64_t v_;
  std::uint32_t counter_;
};

/// Generates `length` indices in [1, n] from the condensed seed.
Strategy gen_strategy(const SeedMaterial& seed, std::size_t n,
                      std::size_t length);

}  // namespace chaoshash
