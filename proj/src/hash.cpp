// Copyright (c) 2026 The chaoshash authors
// SPDX-License-Identifier: Apache-2.0
#include "chaoshash/hash.hpp"

#include <string>
#include <utility>

#include "chaoshash/errors.hpp"

namespace chaoshash {

void ChaosHashParams::validate() const {
  if (n < 4 || n % 4 != 0) {
    throw DomainError("digest size must be a positive multiple of 4, got " +
                      std::to_string(n));
  }
  if (key.empty()) throw DomainError("key must not be empty");
}

Configuration chaos_hash_config(std::size_t n, const BitString& key_bits,
                                const BitString& message_bits) {
  NormalizedMessage normalized = normalize_bits(message_bits, n);
  const SeedMaterial seed =
      derive_seed_bits(std::move(normalized.d), key_bits);
  const Strategy strategy = gen_strategy(seed, n, 2 * n);
  return iterate_negation(strategy, std::move(normalized.x0));
}

std::string chaos_hash(const ChaosHashParams& params,
                       std::string_view message) {
  return chaos_hash_bits(params, encode_ascii7(message));
}

std::string chaos_hash_bits(const ChaosHashParams& params,
                            const BitString& message_bits) {
  params.validate();
  return to_hex(
      chaos_hash_config(params.n, encode_ascii7(params.key), message_bits));
}

void PostTreatKey::validate() const {
  if (k1.empty()) throw DomainError("post-treatment key K1 must not be empty");
  if (k2.empty()) throw DomainError("post-treatment seed K2 must not be empty");
  if (iterations == 0) {
    throw DomainError("post-treatment iteration count must be >= 1");
  }
}

InnerHash::InnerHash(std::string name, std::size_t digest_bits, EvalFn eval)
    : name_(std::move(name)), digest_bits_(digest_bits),
      eval_(std::move(eval)) {
  if (digest_bits_ == 0) throw DomainError("inner digest width must be >= 1");
}

Configuration InnerHash::evaluate(const BitString& key,
                                  const BitString& message) const {
  Configuration digest = eval_(key, message);
  if (digest.n() != digest_bits_) {
    throw LengthMismatchError("inner hash '" + name_ +
                                  "' produced a digest of the wrong width",
                              digest.n(), digest_bits_);
  }
  return digest;
}

namespace inner {

InnerHash chaos(std::size_t n) {
  return InnerHash("chaos", n,
                   [n](const BitString& key, const BitString& message) {
                     return chaos_hash_config(n, key, message);
                   });
}

InnerHash xor_fold(std::size_t n) {
  return InnerHash(
      "xor-fold", n, [n](const BitString& key, const BitString& message) {
        const auto fold = [n](const BitString& bits) {
          BitString padded = bits;
          if (padded.size() % n != 0) {
            padded.append(BitString::zeros(n - padded.size() % n));
          }
          return fold_xor(padded, n);
        };
        return Configuration(fold(message).bits() ^ fold(key).bits());
      });
}

}  // namespace inner

Configuration post_treat_digest(const PostTreatKey& key, const BooleanMap& f,
                                Configuration inner_digest) {
  key.validate();
  if (inner_digest.n() != f.n()) {
    throw LengthMismatchError("digest width does not match the iterated map",
                              inner_digest.n(), f.n());
  }
  const Strategy strategy =
      gen_strategy(SeedMaterial{key.k2}, f.n(), key.iterations);
  return iterate(f, strategy, std::move(inner_digest));
}

Configuration post_treat(const InnerHash& inner_hash, const PostTreatKey& key,
                         const BooleanMap& f, const BitString& message) {
  key.validate();
  if (inner_hash.digest_bits() != f.n()) {
    throw LengthMismatchError("inner digest width does not match the map",
                              inner_hash.digest_bits(), f.n());
  }
  return post_treat_digest(key, f, inner_hash.evaluate(key.k1, message));
}

Configuration invert_post_treat(const PostTreatKey& key, const BooleanMap& f,
                                Configuration digest) {
  key.validate();
  if (!f.invertible()) {
    throw DomainError("map '" + f.name() +
                      "' is not invertible component-wise");
  }
  if (digest.n() != f.n()) {
    throw LengthMismatchError("digest width does not match the iterated map",
                              digest.n(), f.n());
  }
  const Strategy strategy =
      gen_strategy(SeedMaterial{key.k2}, f.n(), key.iterations);
  for (std::size_t i = strategy.size(); i-- > 0;) {
    const std::uint32_t index = strategy.indices[i];
    digest.set_component(index,
                         f.invert_component(digest.component(index), index));
  }
  return digest;
}

}  // namespace chaoshash
