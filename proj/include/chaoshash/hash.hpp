// Copyright (c) 2026 The chaoshash authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "chaoshash/bitstring.hpp"
#include "chaoshash/dynamics.hpp"
#include "chaoshash/pretreatment.hpp"
#include "chaoshash/strategy.hpp"

namespace chaoshash {

/// Parameters of the keyed hash: digest size in bits (a multiple of 4)
/// and a non-empty 7-bit key.
struct ChaosHashParams {
  std::size_t n = 256;
  std::string key;

  void validate() const;
};

/// Core pipeline over an encoded bit stream with raw key bits:
/// normalize, derive the seed, generate a strategy of length 2n, run the
/// asynchronous negation iterations from x0.
Configuration chaos_hash_config(std::size_t n, const BitString& key_bits,
                                const BitString& message_bits);

/// Hex digest of a character message (n/4 uppercase digits).
std::string chaos_hash(const ChaosHashParams& params,
                       std::string_view message);

/// Hex digest of an already encoded bit stream.
std::string chaos_hash_bits(const ChaosHashParams& params,
                            const BitString& message_bits);

/// Key of the post-treatment: the inner hash key K1, the strategy seed K2
/// and the iteration count N >= 1.
struct PostTreatKey {
  BitString k1;
  BitString k2;
  std::size_t iterations = 0;

  void validate() const;
};

/// A keyed hash with a fixed digest width, used as the inner function of
/// the post-treatment. evaluate() checks the implementation returns
/// exactly digest_bits bits.
class InnerHash {
 public:
  using EvalFn =
      std::function<Configuration(const BitString& key, const BitString& msg)>;

  InnerHash(std::string name, std::size_t digest_bits, EvalFn eval);

  const std::string& name() const noexcept { return name_; }
  std::size_t digest_bits() const noexcept { return digest_bits_; }

  Configuration evaluate(const BitString& key,
                         const BitString& message) const;

 private:
  std::string name_;
  std::size_t digest_bits_;
  EvalFn eval_;
};

namespace inner {

/// The chaotic hash itself with the key taken as raw bits.
InnerHash chaos(std::size_t n);

/// Deliberately weak toy hash: the message and the key are each XOR-folded
/// into n bits and combined. Collides massively by construction; used to
/// show the post-treatment preserves, but does not create, resistance.
InnerHash xor_fold(std::size_t n);

}  // namespace inner

/// The keyed permutation applied on top of the inner digest: `iterations`
/// asynchronous steps of f, the indices drawn from the K2-seeded
/// generator.
Configuration post_treat_digest(const PostTreatKey& key, const BooleanMap& f,
                                Configuration inner_digest);

/// Full post-treated hash: inner digest, then post_treat_digest.
/// Throws LengthMismatchError if the inner digest width and f disagree.
Configuration post_treat(const InnerHash& inner_hash, const PostTreatKey& key,
                         const BooleanMap& f, const BitString& message);

/// Inverse of post_treat_digest: replays the same strategy backwards with
/// the component inverse of f. Requires an invertible map.
Configuration invert_post_treat(const PostTreatKey& key, const BooleanMap& f,
                                Configuration digest);

}  // namespace chaoshash
