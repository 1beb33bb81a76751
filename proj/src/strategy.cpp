// Copyright (c) 2026 The chaoshash authors
// SPDX-License-Identifier: Apache-2.0
#include "chaoshash/strategy.hpp"

#include <string>

#include "chaoshash/errors.hpp"

namespace chaoshash {

namespace {

// Replacement for 32-bit state words that fold to zero.
constexpr std::uint32_t kZeroWordFill = 0x9E3779B9u;

}  // namespace

SeedMaterial derive_seed(const BitString& d, std::string_view key) {
  if (key.empty()) throw DomainError("key must not be empty");
  return derive_seed_bits(d, encode_ascii7(key));
}

SeedMaterial derive_seed_bits(const BitString& d, const BitString& key_bits) {
  return derive_seed_bits(BitString(d), key_bits);
}

SeedMaterial derive_seed_bits(BitString&& d, const BitString& key_bits) {
  if (key_bits.empty()) throw DomainError("key must not be empty");
  if (d.empty()) throw DomainError("seed derivation needs a non-empty D");
  d.inplace_xor_cyclic(key_bits);
  return SeedMaterial{std::move(d)};
}

std::vector<std::uint32_t> condense_seed(const SeedMaterial& seed,
                                         std::size_t state_bits) {
  if (state_bits != 128 && state_bits != 192 && state_bits != 256) {
    throw DomainError("generator state size must be 128, 192 or 256 bits");
  }
  if (seed.bits.empty()) throw DomainError("seed material must not be empty");

  // Word-wise view of the chunked fold: 32-bit word j of chunk c is seed
  // word c*(state_bits/32) + j, and the final partial word is already
  // zero-padded by the storage invariant.
  std::vector<std::uint32_t> words(state_bits / 32, 0);
  const std::size_t total_words = (seed.bits.size() + 31) / 32;
  for (std::size_t j = 0; j < total_words; ++j) {
    words[j % words.size()] ^= seed.bits.word32(j);
  }
  for (auto& w : words) {
    if (w == 0) w = kZeroWordFill;
  }
  return words;
}

CombinedXorshift::CombinedXorshift(std::span<const std::uint32_t> state_words) {
  if (state_words.size() != kStateWords) {
    throw DomainError("combined generator expects " +
                      std::to_string(kStateWords) + " state words, got " +
                      std::to_string(state_words.size()));
  }
  for (const std::uint32_t w : state_words) {
    if (w == 0) throw DomainError("generator state words must be non-zero");
  }
  a_ = (static_cast<std::uint64_t>(state_words[0]) << 32) | state_words[1];
  x_ = state_words[2];
  y_ = state_words[3];
  z_ = state_words[4];
  w_ = state_words[5];
  v_ = (static_cast<std::uint64_t>(state_words[6]) << 32) | state_words[7];
  counter_ = 0;
}

CombinedXorshift::CombinedXorshift(const SeedMaterial& seed)
    : CombinedXorshift(std::span<const std::uint32_t>(
          condense_seed(seed, kStateBits))) {
  const auto words = seed.bits.words();
  const std::size_t word_count = (seed.bits.size() + 31) / 32;
  for (std::size_t j = 0; j < word_count; ++j) {
    const std::uint64_t packed = words[j >> 1];
    absorb(static_cast<std::uint32_t>((j & 1) == 0 ? packed >> 32 : packed));
  }
}

void CombinedXorshift::absorb(std::uint32_t word) {
  a_ ^= (static_cast<std::uint64_t>(word) << 32) | (word ^ 0x6A09E667u);
  if (a_ == 0) a_ = 0x9E3779B97F4A7C15ull;
  (void)next_word();
}

std::uint32_t CombinedXorshift::next_word() {
  // Subgenerator 1: 64-bit xorshift, high word kept.
  a_ ^= a_ << 13;
  a_ ^= a_ >> 7;
  a_ ^= a_ << 17;
  // Subgenerator 2: 128-bit xorshift over four 32-bit words.
  const std::uint32_t t = x_ ^ (x_ << 11);
  x_ = y_;
  y_ = z_;
  z_ = w_;
  w_ = w_ ^ (w_ >> 19) ^ t ^ (t >> 8);
  // Subgenerator 3: 64-bit xorshift with a Weyl counter added to its
  // low word, xorwow style.
  v_ ^= v_ >> 12;
  v_ ^= v_ << 25;
  v_ ^= v_ >> 27;
  counter_ += 362437u;
  return (static_cast<std::uint32_t>(a_ >> 32) ^ w_) +
         (static_cast<std::uint32_t>(v_) + counter_);
}

std::uint32_t CombinedXorshift::next_index(std::size_t n) {
  if (n == 0) throw DomainError("index range must be non-empty");
  if (n > (std::uint64_t{1} << 32)) {
    throw DomainError("index range exceeds the 32-bit draw width");
  }
  const std::size_t words_per_candidate = (2 * n + 31) / 32;
  const std::uint64_t accept_below = (std::uint64_t{1} << 32) / n * n;
  for (;;) {
    std::uint32_t candidate = 0;
    for (std::size_t k = 0; k < words_per_candidate; ++k) {
      candidate ^= next_word();
    }
    if (candidate < accept_below) {
      return static_cast<std::uint32_t>(candidate % n) + 1;
    }
  }
}

Strategy gen_strategy(const SeedMaterial& seed, std::size_t n,
                      std::size_t length) {
  if (length == 0) throw DomainError("strategy length must be positive");
  CombinedXorshift gen(seed);
  Strategy strategy;
  strategy.n = n;
  strategy.indices.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    strategy.indices.push_back(gen.next_index(n));
  }
  return strategy;
}

}  // namespace chaoshash
