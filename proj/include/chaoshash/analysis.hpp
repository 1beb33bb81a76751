// Copyright (c) 2026 The chaoshash authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "chaoshash/bitstring.hpp"
#include "chaoshash/hash.hpp"

namespace chaoshash {

/// Small deterministic generator for the experiment harness (message
/// drawing, bit picking). Each (seed, stream) pair yields an independent
/// sequence; reports are reproducible for a fixed seed regardless of the
/// thread count. Not related to the strategy generator.
class HarnessRng {
 public:
  HarnessRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();

  /// Uniform draw in [0, bound) by 32x32 multiply-shift.
  std::uint32_t below(std::uint32_t bound);

 private:
  std::uint64_t state_;
};

/// `count` pseudorandom bits.
BitString random_bits(HarnessRng& rng, std::size_t count);

/// Aggregate statistics of one-bit-flip trials: extremes and histogram of
/// the per-trial Hamming distances, the mean changed bit number, the mean
/// changed probability (in percent) and their dispersions.
struct DiffusionReport {
  std::size_t n = 0;
  std::size_t msg_bits = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  std::size_t b_min = 0;
  std::size_t b_max = 0;
  double b_mean = 0.0;
  double p_mean_pct = 0.0;
  double delta_b = 0.0;
  double delta_p_pct = 0.0;
  std::vector<std::uint64_t> histogram;  // histogram[k] = trials with B = k
};

/// Statistics from a per-distance histogram (histogram[k] counts trials
/// whose digests differed in k bits).
DiffusionReport summarize_diffusion(std::size_t n, std::size_t msg_bits,
                                    std::uint64_t seed, bool exhaustive,
                                    std::vector<std::uint64_t> histogram);

/// One-bit-flip experiment. Messages are drawn as msg_len_bits/8 printable
/// 7-bit bytes (msg_len_bits >= 8, divisible by 8); the flip toggles one
/// bit of the 7-bit encoded stream, below the character layer. In
/// exhaustive mode a single base message is drawn and every bit of its
/// encoded stream is flipped once (the trial count becomes the encoded
/// length). threads = 0 means one worker per available core.
DiffusionReport diffusion_test(const ChaosHashParams& params,
                               std::size_t msg_len_bits, std::size_t trials,
                               std::uint64_t seed, bool exhaustive = false,
                               unsigned threads = 0);

/// Harness self-calibration: the same aggregation fed by a fair-coin
/// reference in place of the hash (each trial compares two independent
/// uniform n-bit vectors, so B follows Binomial(n, 1/2)).
DiffusionReport diffusion_reference(std::size_t n, std::size_t trials,
                                    std::uint64_t seed, unsigned threads = 0);

/// Summary of the strict-avalanche-criterion dependence matrices: for each
/// sampled message size, entry (i, j) of J is the frequency with which
/// digest bit j flipped when message bit i was toggled over r random
/// messages; the summary aggregates every entry of every sampled size.
struct SacReport {
  std::size_t digest_bits = 0;
  std::size_t r = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> sizes;
  double j_mean = 0.0;
  double j_min = 0.0;
  double j_max = 0.0;
  double j_stddev = 0.0;
};

/// Digest function over raw bit streams, pluggable for calibration.
using DigestFn = std::function<Configuration(const BitString&)>;

/// Dependence-matrix experiment for an arbitrary digest function and an
/// explicit size list.
SacReport sac_test_fn(const DigestFn& digest_fn, std::size_t digest_bits,
                      const std::vector<std::size_t>& sizes, std::size_t r,
                      std::uint64_t seed, unsigned threads = 0);

/// `count` message sizes drawn uniformly from [1, max_bits].
std::vector<std::size_t> sample_sac_sizes(std::size_t count,
                                          std::uint64_t seed,
                                          std::size_t max_bits = 1000);

/// Dependence-matrix experiment for the chaotic hash with size_samples
/// random sizes in [1, 1000] and r messages per size.
SacReport sac_test(const ChaosHashParams& params, std::size_t size_samples,
                   std::size_t r, std::uint64_t seed, unsigned threads = 0);

/// Symbol/position tables for a text and for its digest: one row per
/// character of the text (its code and 1-based position) and one row per
/// hex digit of the digest (its value 0-15 and 1-based position).
struct RepartitionExport {
  struct Row {
    int symbol;
    std::size_t position;
  };
  std::vector<Row> source;
  std::vector<Row> digest;
};

RepartitionExport repartition_export(const ChaosHashParams& params,
                                     std::string_view text);

/// One line of the scaling benchmark.
struct BenchRow {
  std::size_t message_bits = 0;
  double median_seconds = 0.0;
  double seconds_per_mbit = 0.0;
  double doubling_ratio = 0.0;  // NaN on the first row
};

/// Wall time of one full hash per (digest size, message) pair. Each pair
/// is sampled in every round (median of the round's per-call times) and
/// the best round wins; interleaving the pairs across rounds keeps the
/// ratios between them meaningful even when another process steals CPU
/// for a while.
struct HashTimingSpec {
  std::size_t n;
  const BitString* message;
};
std::vector<double> robust_hash_times(const std::vector<HashTimingSpec>& specs,
                                      const BitString& key_bits,
                                      int rounds = 5);

/// Single-pair convenience wrapper around robust_hash_times.
double median_hash_seconds(std::size_t n, const BitString& key_bits,
                           const BitString& message_bits, int rounds = 5);

/// Hash wall time per message length plus the ratio against the previous
/// length. Lengths must be strictly increasing and non-empty.
std::vector<BenchRow> scaling_benchmark(const ChaosHashParams& params,
                                        const std::vector<std::size_t>& lengths,
                                        std::uint64_t seed = 1);

/// CSV renderings with fixed headers (documented in the README).
std::string to_csv(const DiffusionReport& report);
std::string histogram_csv(const DiffusionReport& report);
std::string to_csv(const SacReport& report);
std::string to_csv(const RepartitionExport& report);
std::string to_csv(const std::vector<BenchRow>& rows);

}  // namespace chaoshash
