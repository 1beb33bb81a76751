// Copyright (c) 2026 The chaoshash authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <chrono>
#include <map>
#include <set>
#include <vector>

#include "chaoshash/analysis.hpp"
#include "chaoshash/dynamics.hpp"
#include "chaoshash/errors.hpp"
#include "chaoshash/hash.hpp"
#include "golden_vectors.hpp"

using namespace chaoshash;

TEST_CASE("chaos_hash shape and determinism") {
  const ChaosHashParams params{256, "my key"};
  const std::string digest = chaos_hash(params, testvec::kGoldenMessage);
  CHECK(digest.size() == 64);
  CHECK(digest == chaos_hash(params, testvec::kGoldenMessage));
  for (const char c : digest) {
    CHECK(((c >= '0' && c <= '9') || (c >= 'A' && c <= 'F')));
  }

  const ChaosHashParams wide{512, "my key"};
  CHECK(chaos_hash(wide, testvec::kGoldenMessage).size() == 128);
  const ChaosHashParams tiny{12, "my key"};
  CHECK(chaos_hash(tiny, "abc").size() == 3);

  CHECK_THROWS_AS(chaos_hash(ChaosHashParams{256, ""}, "m"), DomainError);
  CHECK_THROWS_AS(chaos_hash(ChaosHashParams{10, "k"}, "m"), DomainError);
}

TEST_CASE("frozen digest vectors") {
  CHECK(chaos_hash(ChaosHashParams{256, "my key"}, "The original text") ==
        testvec::kDigestMyKey256);
  CHECK(chaos_hash(ChaosHashParams{256, "my key"}, "the original text") ==
        testvec::kDigestMyKeyLower256);
  CHECK(chaos_hash(ChaosHashParams{512, "my key"}, "The original text") ==
        testvec::kDigestMyKey512);
  CHECK(chaos_hash(ChaosHashParams{256, "another key"}, "The original text") ==
        testvec::kDigestAnotherKey256);
  CHECK(testvec::kDigestMyKey256 != testvec::kForeignDigestUpper);
  CHECK(testvec::kDigestMyKeyLower256 != testvec::kForeignDigestLower);
}

TEST_CASE("chaos_hash pipeline equals the composed stages") {
  // Dual route: the dedicated pipeline against the generic dynamics path.
  const std::size_t n = 256;
  const BitString key_bits = encode_ascii7("my key");
  const BitString msg_bits = encode_ascii7("two routes, one digest");
  const NormalizedMessage norm = normalize_bits(msg_bits, n);
  const Strategy strategy =
      gen_strategy(derive_seed_bits(norm.d, key_bits), n, 2 * n);
  const Configuration via_generic =
      iterate(maps::negation(n), strategy, norm.x0);
  CHECK(to_hex(via_generic) ==
        to_hex(chaos_hash_config(n, key_bits, msg_bits)));
}

TEST_CASE("different keys give different digests") {
  HarnessRng rng(89, 0);
  std::set<std::string> keys;
  std::set<std::string> digests;
  for (int round = 0; round < 1000; ++round) {
    std::string key(1 + rng.below(16), ' ');
    for (auto& c : key) c = static_cast<char>(33 + rng.below(94));
    keys.insert(key);
    digests.insert(chaos_hash(ChaosHashParams{256, key}, "fixed message"));
  }
  // Short random keys repeat in the draw itself; every distinct key must
  // still land on its own digest.
  CHECK(digests.size() == keys.size());
}

TEST_CASE("a megabyte message hashes well under a second") {
  HarnessRng rng(113, 0);
  const BitString message = random_bits(rng, 8 * 1024 * 1024);
  const BitString key_bits = encode_ascii7("my key");
  const auto start = std::chrono::steady_clock::now();
  volatile std::uint64_t sink =
      chaos_hash_config(256, key_bits, message).bits().words()[0];
  (void)sink;
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  CHECK(elapsed < 1.0);
}

TEST_CASE("post-treatment with N = 1 flips exactly one bit") {
  HarnessRng rng(97, 0);
  const InnerHash toy = inner::xor_fold(16);
  const PostTreatKey key{random_bits(rng, 16), random_bits(rng, 32), 1};
  const BitString message = random_bits(rng, 77);
  const Configuration plain = toy.evaluate(key.k1, message);
  const Configuration treated =
      post_treat(toy, key, maps::negation(16), message);
  CHECK(hamming_distance(plain, treated) == 1);

  CHECK_THROWS_AS(post_treat(toy, key, maps::negation(8), message),
                  LengthMismatchError);
  const PostTreatKey no_iters{key.k1, key.k2, 0};
  CHECK_THROWS_AS(post_treat(toy, no_iters, maps::negation(16), message),
                  DomainError);
}

TEST_CASE("post-treatment round-trips through its inverse") {
  HarnessRng rng(101, 0);
  for (int round = 0; round < 50; ++round) {
    const PostTreatKey key{random_bits(rng, 64), random_bits(rng, 64),
                           1 + rng.below(512)};
    const Configuration digest = Configuration(random_bits(rng, 256));
    const BooleanMap neg = maps::negation(256);
    const Configuration treated = post_treat_digest(key, neg, digest);
    CHECK(invert_post_treat(key, neg, treated) == digest);
  }

  // Toy map with a mask: exhaustive over all 256 states at n = 8.
  HarnessRng rng8(103, 0);
  const BooleanMap toggles = maps::toggle_rotation(8, random_bits(rng8, 8));
  const PostTreatKey key{random_bits(rng8, 8), random_bits(rng8, 16), 23};
  for (std::uint32_t v = 0; v < 256; ++v) {
    const Configuration digest = config_from_value(v, 8);
    CHECK(invert_post_treat(key, toggles,
                            post_treat_digest(key, toggles, digest)) ==
          digest);
  }

  CHECK_THROWS_AS(
      invert_post_treat(key, maps::constant_zero(8), Configuration::zeros(8)),
      DomainError);
}

TEST_CASE("post-treatment keeps the inner collision relation") {
  // Exhaustive toy instance: every 12-bit message, an 8-bit weak inner
  // hash, a handful of keys. Two messages collide under the treated hash
  // exactly when they collide under the inner hash.
  const std::size_t message_bits = 12;
  const InnerHash toy = inner::xor_fold(8);
  const BooleanMap neg = maps::negation(8);
  HarnessRng rng(107, 0);
  for (int round = 0; round < 5; ++round) {
    const PostTreatKey key{random_bits(rng, 8), random_bits(rng, 24),
                           1 + rng.below(64)};
    std::map<std::uint32_t, std::uint32_t> inner_to_treated;
    std::set<std::uint32_t> treated_seen;
    for (std::uint32_t v = 0; v < (1u << message_bits); ++v) {
      BitString message = BitString::from_uint64(v, message_bits);
      const std::uint32_t inner_value =
          config_value(toy.evaluate(key.k1, message));
      const std::uint32_t treated_value =
          config_value(post_treat(toy, key, neg, message));
      const auto [it, inserted] =
          inner_to_treated.emplace(inner_value, treated_value);
      if (inserted) {
        // A fresh inner class must map to a fresh treated class.
        CHECK(treated_seen.insert(treated_value).second);
      } else {
        CHECK(it->second == treated_value);
      }
    }
  }
}

TEST_CASE("the weak toy hash stays weak after post-treatment") {
  // The post-treatment preserves resistance; it does not create it. The
  // xor-fold inner hash collides on swapped blocks and the treated hash
  // collides along with it.
  const InnerHash toy = inner::xor_fold(8);
  const BooleanMap neg = maps::negation(8);
  HarnessRng rng(109, 0);
  const PostTreatKey key{random_bits(rng, 8), random_bits(rng, 16), 40};

  BitString m1 = BitString::from_uint64(0xAB, 8);
  m1.append(BitString::from_uint64(0xCD, 8));
  BitString m2 = BitString::from_uint64(0xCD, 8);
  m2.append(BitString::from_uint64(0xAB, 8));
  REQUIRE(toy.evaluate(key.k1, m1) == toy.evaluate(key.k1, m2));
  CHECK(post_treat(toy, key, neg, m1) == post_treat(toy, key, neg, m2));
}
