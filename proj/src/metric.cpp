// Copyright (c) 2026 The chaoshash authors
// SPDX-License-Identifier: Apache-2.0
#include "chaoshash/metric.hpp"

#include <cstdlib>
#include <string>

#include "chaoshash/errors.hpp"

namespace chaoshash {

std::size_t d_e(const Configuration& a, const Configuration& b) {
  return hamming_distance(a, b);
}

Rational d_s(const Strategy& a, const Strategy& b, std::size_t prefix_len) {
  if (a.n != b.n) {
    throw LengthMismatchError("strategies live on different index ranges",
                              a.n, b.n);
  }
  if (a.n == 0) throw DomainError("strategies need n >= 1");
  if (a.size() < prefix_len || b.size() < prefix_len) {
    throw DomainError("both strategies must provide at least " +
                      std::to_string(prefix_len) + " terms");
  }
  // Σ |a_k - b_k| · 10^(K-k), an integer; the distance is 9·Σ / (n·10^K).
  BigInt numerator = 0;
  for (std::size_t k = 0; k < prefix_len; ++k) {
    const std::int64_t diff = static_cast<std::int64_t>(a.indices[k]) -
                              static_cast<std::int64_t>(b.indices[k]);
    numerator *= 10;
    numerator += std::abs(diff);
  }
  BigInt denominator = a.n;
  for (std::size_t k = 0; k < prefix_len; ++k) denominator *= 10;
  return Rational(9 * numerator, denominator);
}

Rational ds_tail_bound(std::size_t n, std::size_t prefix_len) {
  if (n == 0) throw DomainError("tail bound needs n >= 1");
  BigInt denominator = n;
  for (std::size_t k = 0; k < prefix_len; ++k) denominator *= 10;
  return Rational(BigInt(n - 1), denominator);
}

Rational distance(const MetricPoint& x, const MetricPoint& y,
                  std::size_t prefix_len) {
  return Rational(d_e(x.config, y.config)) +
         d_s(x.strategy, y.strategy, prefix_len);
}

}  // namespace chaoshash
