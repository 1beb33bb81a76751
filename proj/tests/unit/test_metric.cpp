// Copyright (c) 2026 The chaoshash authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <vector>

#include "chaoshash/analysis.hpp"
#include "chaoshash/errors.hpp"
#include "chaoshash/metric.hpp"

using namespace chaoshash;

namespace {

Strategy make_strategy(std::vector<std::uint32_t> indices, std::size_t n) {
  Strategy s;
  s.indices = std::move(indices);
  s.n = n;
  return s;
}

Strategy random_strategy(HarnessRng& rng, std::size_t n, std::size_t length) {
  Strategy s;
  s.n = n;
  s.indices.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    s.indices.push_back(1 + rng.below(static_cast<std::uint32_t>(n)));
  }
  return s;
}

Rational pow10_inverse(std::size_t k) {
  BigInt d = 1;
  for (std::size_t i = 0; i < k; ++i) d *= 10;
  return Rational(1, d);
}

}  // namespace

TEST_CASE("d_e is the Hamming distance") {
  const Configuration x(BitString::from_string("0000"));
  const Configuration y(BitString::from_string("0101"));
  CHECK(d_e(x, x) == 0);
  CHECK(d_e(x, y) == 2);
  BitString complement = x.bits();
  for (std::size_t i = 0; i < 4; ++i) complement.flip_bit(i);
  CHECK(d_e(x, Configuration(complement)) == 4);
  CHECK_THROWS_AS(d_e(x, Configuration::zeros(6)), LengthMismatchError);
}

TEST_CASE("d_s single-term example") {
  // n = 4, first terms 1 vs 2, equal elsewhere, K = 6: 9/4 * 1/10 = 9/40.
  const Strategy a = make_strategy({1, 3, 3, 3, 3, 3}, 4);
  const Strategy b = make_strategy({2, 3, 3, 3, 3, 3}, 4);
  CHECK(d_s(a, b, 6) == Rational(9, 40));
  CHECK(d_s(a, a, 6) == 0);
  CHECK_THROWS_AS(d_s(a, b, 7), DomainError);
  CHECK_THROWS_AS(d_s(a, make_strategy({1, 1, 1, 1, 1, 1}, 5), 6),
                  LengthMismatchError);
}

TEST_CASE("tail bound") {
  CHECK(ds_tail_bound(4, 6) == Rational(3, BigInt(4) * 1000000));
  // The bound dominates any tail: a full run of maximal differences from
  // position K+1 onwards sums to exactly the bound in the limit.
  CHECK(ds_tail_bound(256, 0) == Rational(255, 256));
}

TEST_CASE("prefix law, exhaustive for n = 4 and K = 3") {
  // d_s < 10^-k iff the first k terms agree; if digit k is non-zero the
  // k-th terms differ. Checked over every pair of strategies here (the
  // acceptance suite runs the full K = 6 sweep).
  const std::size_t n = 4;
  const std::size_t K = 3;
  std::vector<Strategy> all;
  for (std::uint32_t v = 0; v < 64; ++v) {
    all.push_back(make_strategy({1 + (v & 3), 1 + ((v >> 2) & 3),
                                 1 + ((v >> 4) & 3)},
                                n));
  }
  for (const auto& a : all) {
    for (const auto& b : all) {
      const Rational ds = d_s(a, b, K);
      for (std::size_t k = 0; k <= K; ++k) {
        bool prefix_equal = true;
        for (std::size_t i = 0; i < k; ++i) {
          prefix_equal = prefix_equal && a.indices[i] == b.indices[i];
        }
        CHECK((ds < pow10_inverse(k)) == prefix_equal);
      }
    }
  }
}

TEST_CASE("metric axioms on random samples") {
  HarnessRng rng(83, 0);
  const std::size_t n = 16;
  const std::size_t K = 8;
  for (int round = 0; round < 200; ++round) {
    const MetricPoint x{random_strategy(rng, n, K),
                        Configuration(random_bits(rng, n))};
    const MetricPoint y{random_strategy(rng, n, K),
                        Configuration(random_bits(rng, n))};
    const MetricPoint z{random_strategy(rng, n, K),
                        Configuration(random_bits(rng, n))};

    const Rational dxy = distance(x, y, K);
    CHECK(dxy >= 0);
    CHECK(distance(x, x, K) == 0);
    CHECK(dxy == distance(y, x, K));
    CHECK(dxy <= distance(x, z, K) + distance(z, y, K));

    // Floor law: the integer part counts differing cells (d_s < 1 since
    // d_s <= (n-1)/n).
    const BigInt floor_value = numerator(dxy) / denominator(dxy);
    CHECK(floor_value == d_e(x.config, y.config));
    CHECK(d_s(x.strategy, y.strategy, K) < 1);
  }
}
