// Copyright (c) 2026 The chaoshash authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>

#include "chaoshash/bitstring.hpp"
#include "chaoshash/strategy.hpp"

namespace chaoshash {

/// Exact rational value. The strategy part of the distance is an exact
/// iff-statement about prefixes, so no floating point is involved.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// A point of the iteration space restricted to a finite strategy prefix.
/// Distances computed from it are exact partial sums; the truncated tail
/// is bounded by ds_tail_bound(n, prefix length).
struct MetricPoint {
  Strategy strategy;
  Configuration config;
};

/// Configuration part of the distance: the Hamming distance (an integer).
std::size_t d_e(const Configuration& a, const Configuration& b);

/// Strategy part: (9/n) * sum over k = 1..prefix_len of
/// |a_k - b_k| / 10^k, as an exact rational. Both strategies must provide
/// at least prefix_len terms and share the same n.
Rational d_s(const Strategy& a, const Strategy& b, std::size_t prefix_len);

/// Upper bound on the omitted tail of d_s beyond prefix_len terms:
/// (n-1)/n * 10^(-prefix_len).
Rational ds_tail_bound(std::size_t n, std::size_t prefix_len);

/// d_e + d_s over the first prefix_len strategy terms.
Rational distance(const MetricPoint& x, const MetricPoint& y,
                  std::size_t prefix_len);

}  // namespace chaoshash
