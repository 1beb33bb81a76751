// Copyright (c) 2026 The chaoshash authors
// SPDX-License-Identifier: Apache-2.0
#include "chaoshash/analysis.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <thread>

#include "chaoshash/errors.hpp"

namespace chaoshash {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs body(chunk, begin, end) over a static partition of [0, total);
// chunk results must be merged order-independently by the caller.
void parallel_chunks(
    std::size_t total, unsigned threads,
    const std::function<void(unsigned, std::size_t, std::size_t)>& body) {
  threads = std::max(1u, std::min<unsigned>(resolve_threads(threads),
                                            std::max<std::size_t>(total, 1)));
  if (threads == 1) {
    body(0, 0, total);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = total * t / threads;
    const std::size_t end = total * (t + 1) / threads;
    workers.emplace_back([&body, t, begin, end] { body(t, begin, end); });
  }
  for (auto& w : workers) w.join();
}

std::string random_printable_chars(HarnessRng& rng, std::size_t count) {
  std::string out(count, ' ');
  for (auto& c : out) {
    c = static_cast<char>(32 + rng.below(95));
  }
  return out;
}

void append_row(std::string& out, const char* format, ...)
    __attribute__((format(printf, 2, 3)));

void append_row(std::string& out, const char* format, ...) {
  char buffer[256];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buffer, sizeof(buffer), format, args);
  va_end(args);
  out += buffer;
}

}  // namespace

HarnessRng::HarnessRng(std::uint64_t seed, std::uint64_t stream)
    : state_(mix64(seed + 0x9E3779B97F4A7C15ull) ^
             mix64(stream * 0xD1B54A32D192ED03ull + 0x8CB92BA72F3D8DD7ull)) {}

std::uint64_t HarnessRng::next_u64() {
  state_ += 0x9E3779B97F4A7C15ull;
  return mix64(state_);
}

std::uint32_t HarnessRng::below(std::uint32_t bound) {
  if (bound == 0) throw DomainError("bound must be positive");
  const std::uint64_t word = next_u64() & 0xFFFFFFFFull;
  return static_cast<std::uint32_t>((word * bound) >> 32);
}

BitString random_bits(HarnessRng& rng, std::size_t count) {
  BitString out;
  while (out.size() + 64 <= count) {
    out.append(BitString::from_uint64(rng.next_u64(), 64));
  }
  if (out.size() < count) {
    out.append(BitString::from_uint64(rng.next_u64(), count - out.size()));
  }
  return out;
}

DiffusionReport summarize_diffusion(std::size_t n, std::size_t msg_bits,
                                    std::uint64_t seed, bool exhaustive,
                                    std::vector<std::uint64_t> histogram) {
  if (histogram.size() != n + 1) {
    throw DomainError("histogram must have n + 1 buckets");
  }
  DiffusionReport report;
  report.n = n;
  report.msg_bits = msg_bits;
  report.seed = seed;
  report.exhaustive = exhaustive;

  std::uint64_t trials = 0;
  std::uint64_t sum = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    trials += histogram[k];
    sum += histogram[k] * k;
  }
  if (trials == 0) throw DomainError("diffusion statistics need >= 1 trial");
  report.trials = trials;
  report.b_min = n;
  report.b_max = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    if (histogram[k] != 0) {
      report.b_min = std::min(report.b_min, k);
      report.b_max = std::max(report.b_max, k);
    }
  }
  const double mean = static_cast<double>(sum) / static_cast<double>(trials);
  double variance = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    const double delta = static_cast<double>(k) - mean;
    variance += static_cast<double>(histogram[k]) * delta * delta;
  }
  variance /= static_cast<double>(trials);
  report.b_mean = mean;
  report.p_mean_pct = 100.0 * mean / static_cast<double>(n);
  report.delta_b = std::sqrt(variance);
  report.delta_p_pct = 100.0 * report.delta_b / static_cast<double>(n);
  report.histogram = std::move(histogram);
  return report;
}

DiffusionReport diffusion_test(const ChaosHashParams& params,
                               std::size_t msg_len_bits, std::size_t trials,
                               std::uint64_t seed, bool exhaustive,
                               unsigned threads) {
  params.validate();
  if (msg_len_bits < 8 || msg_len_bits % 8 != 0) {
    throw DomainError("message length must be a multiple of 8 bits, >= 8");
  }
  const std::size_t char_count = msg_len_bits / 8;
  const std::size_t encoded_bits = 7 * char_count;
  const BitString key_bits = encode_ascii7(params.key);

  if (exhaustive) trials = encoded_bits;
  if (trials == 0) throw DomainError("trial count must be >= 1");

  const unsigned workers = resolve_threads(threads);
  std::vector<std::vector<std::uint64_t>> partial(
      workers, std::vector<std::uint64_t>(params.n + 1, 0));

  parallel_chunks(
      trials, workers,
      [&](unsigned chunk, std::size_t begin, std::size_t end) {
        auto& histogram = partial[chunk];
        BitString base_bits;
        Configuration base_digest = Configuration::zeros(params.n);
        if (exhaustive) {
          HarnessRng rng(seed, 0);
          base_bits = encode_ascii7(random_printable_chars(rng, char_count));
          base_digest = chaos_hash_config(params.n, key_bits, base_bits);
        }
        for (std::size_t i = begin; i < end; ++i) {
          if (exhaustive) {
            BitString flipped = base_bits;
            flipped.flip_bit(i);
            const Configuration other =
                chaos_hash_config(params.n, key_bits, flipped);
            ++histogram[hamming_distance(base_digest, other)];
          } else {
            HarnessRng rng(seed, i + 1);
            BitString bits =
                encode_ascii7(random_printable_chars(rng, char_count));
            const Configuration first =
                chaos_hash_config(params.n, key_bits, bits);
            bits.flip_bit(rng.below(static_cast<std::uint32_t>(encoded_bits)));
            const Configuration second =
                chaos_hash_config(params.n, key_bits, bits);
            ++histogram[hamming_distance(first, second)];
          }
        }
      });

  std::vector<std::uint64_t> histogram(params.n + 1, 0);
  for (const auto& h : partial) {
    for (std::size_t k = 0; k <= params.n; ++k) histogram[k] += h[k];
  }
  return summarize_diffusion(params.n, msg_len_bits, seed, exhaustive,
                             std::move(histogram));
}

DiffusionReport diffusion_reference(std::size_t n, std::size_t trials,
                                    std::uint64_t seed, unsigned threads) {
  if (n == 0) throw DomainError("digest size must be >= 1");
  if (trials == 0) throw DomainError("trial count must be >= 1");
  const unsigned workers = resolve_threads(threads);
  std::vector<std::vector<std::uint64_t>> partial(
      workers, std::vector<std::uint64_t>(n + 1, 0));
  parallel_chunks(trials, workers,
                  [&](unsigned chunk, std::size_t begin, std::size_t end) {
                    auto& histogram = partial[chunk];
                    for (std::size_t i = begin; i < end; ++i) {
                      HarnessRng rng(seed, i + 1);
                      const BitString a = random_bits(rng, n);
                      const BitString b = random_bits(rng, n);
                      ++histogram[(a ^ b).popcount()];
                    }
                  });
  std::vector<std::uint64_t> histogram(n + 1, 0);
  for (const auto& h : partial) {
    for (std::size_t k = 0; k <= n; ++k) histogram[k] += h[k];
  }
  return summarize_diffusion(n, 0, seed, false, std::move(histogram));
}

SacReport sac_test_fn(const DigestFn& digest_fn, std::size_t digest_bits,
                      const std::vector<std::size_t>& sizes, std::size_t r,
                      std::uint64_t seed, unsigned threads) {
  if (digest_bits == 0) throw DomainError("digest size must be >= 1");
  if (sizes.empty()) throw DomainError("at least one message size is needed");
  if (r == 0) throw DomainError("messages per size must be >= 1");
  for (const std::size_t s : sizes) {
    if (s == 0) throw DomainError("message sizes must be >= 1");
  }

  const std::size_t m = digest_bits;
  std::uint64_t count_sum = 0;
  std::uint64_t count_square_sum = 0;
  std::uint64_t entry_count = 0;
  std::uint64_t count_min = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count_max = 0;

  for (std::size_t size_index = 0; size_index < sizes.size(); ++size_index) {
    const std::size_t size = sizes[size_index];
    const unsigned workers = resolve_threads(threads);
    std::vector<std::vector<std::uint32_t>> partial(
        workers, std::vector<std::uint32_t>(size * m, 0));

    parallel_chunks(
        r, workers, [&](unsigned chunk, std::size_t begin, std::size_t end) {
          auto& counts = partial[chunk];
          for (std::size_t msg_index = begin; msg_index < end; ++msg_index) {
            HarnessRng rng(seed, (size_index << 32) + msg_index + 1);
            BitString message = random_bits(rng, size);
            const Configuration base = digest_fn(message);
            for (std::size_t i = 0; i < size; ++i) {
              message.flip_bit(i);
              const Configuration flipped = digest_fn(message);
              message.flip_bit(i);
              const BitString diff = base.bits() ^ flipped.bits();
              const auto words = diff.words();
              for (std::size_t wj = 0; wj < words.size(); ++wj) {
                std::uint64_t w = words[wj];
                while (w != 0) {
                  const int lead = std::countl_zero(w);
                  ++counts[i * m + wj * 64 + static_cast<std::size_t>(lead)];
                  w &= ~(0x8000000000000000ull >> lead);
                }
              }
            }
          }
        });

    std::vector<std::uint64_t> counts(size * m, 0);
    for (const auto& p : partial) {
      for (std::size_t e = 0; e < counts.size(); ++e) counts[e] += p[e];
    }
    for (const std::uint64_t c : counts) {
      count_sum += c;
      count_square_sum += c * c;
      count_min = std::min(count_min, c);
      count_max = std::max(count_max, c);
    }
    entry_count += counts.size();
  }

  SacReport report;
  report.digest_bits = digest_bits;
  report.r = r;
  report.seed = seed;
  report.sizes = sizes;
  const double denom =
      static_cast<double>(entry_count) * static_cast<double>(r);
  report.j_mean = static_cast<double>(count_sum) / denom;
  report.j_min =
      static_cast<double>(count_min) / static_cast<double>(r);
  report.j_max =
      static_cast<double>(count_max) / static_cast<double>(r);
  const double mean_square = static_cast<double>(count_square_sum) /
                             (static_cast<double>(entry_count) *
                              static_cast<double>(r) * static_cast<double>(r));
  const double variance =
      std::max(0.0, mean_square - report.j_mean * report.j_mean);
  report.j_stddev = std::sqrt(variance);
  return report;
}

std::vector<std::size_t> sample_sac_sizes(std::size_t count,
                                          std::uint64_t seed,
                                          std::size_t max_bits) {
  if (count == 0) throw DomainError("size sample count must be >= 1");
  if (max_bits == 0) throw DomainError("maximum message size must be >= 1");
  HarnessRng rng(seed, 0);
  std::vector<std::size_t> sizes(count);
  for (auto& s : sizes) {
    s = 1 + rng.below(static_cast<std::uint32_t>(max_bits));
  }
  return sizes;
}

SacReport sac_test(const ChaosHashParams& params, std::size_t size_samples,
                   std::size_t r, std::uint64_t seed, unsigned threads) {
  params.validate();
  const BitString key_bits = encode_ascii7(params.key);
  const auto digest_fn = [&params, &key_bits](const BitString& message) {
    return chaos_hash_config(params.n, key_bits, message);
  };
  return sac_test_fn(digest_fn, params.n, sample_sac_sizes(size_samples, seed),
                     r, seed, threads);
}

RepartitionExport repartition_export(const ChaosHashParams& params,
                                     std::string_view text) {
  if (text.empty()) throw DomainError("text must not be empty");
  RepartitionExport report;
  report.source.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    report.source.push_back(
        {static_cast<int>(static_cast<unsigned char>(text[i])), i + 1});
  }
  const std::string digest = chaos_hash(params, text);
  report.digest.reserve(digest.size());
  for (std::size_t i = 0; i < digest.size(); ++i) {
    const char c = digest[i];
    const int value = (c <= '9') ? c - '0' : c - 'A' + 10;
    report.digest.push_back({value, i + 1});
  }
  return report;
}

double median_hash_seconds(std::size_t n, const BitString& key_bits,
                           const BitString& message_bits, int batches,
                           double min_batch_seconds) {
  using clock = std::chrono::steady_clock;
  if (batches < 1) throw DomainError("need at least one timing sample");

  const auto one_call = [&] {
    const auto start = clock::now();
    volatile std::uint64_t sink =
        chaos_hash_config(n, key_bits, message_bits).bits().words()[0];
    (void)sink;
    return std::chrono::duration<double>(clock::now() - start).count();
  };

  // Warm-up and calibration: sample until both the minimum call count and
  // the minimum total measurement time are reached, then take the median
  // of the per-call times. The median is insensitive to allocator or
  // scheduler spikes that hit individual calls.
  (void)one_call();
  const std::size_t min_calls =
      std::max<std::size_t>(static_cast<std::size_t>(batches) * 5, 25);
  const std::size_t max_calls = 20000;
  const double min_total = std::max(min_batch_seconds, 0.02);
  std::vector<double> samples;
  samples.reserve(min_calls);
  double total = 0.0;
  while (samples.size() < max_calls &&
         (samples.size() < min_calls || total < min_total)) {
    const double t = one_call();
    samples.push_back(t);
    total += t;
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

std::vector<BenchRow> scaling_benchmark(const ChaosHashParams& params,
                                        const std::vector<std::size_t>& lengths,
                                        std::uint64_t seed) {
  params.validate();
  if (lengths.empty()) throw DomainError("length list must not be empty");
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] == 0) throw DomainError("message lengths must be >= 1");
    if (i > 0 && lengths[i] <= lengths[i - 1]) {
      throw DomainError("message lengths must be strictly increasing");
    }
  }
  const BitString key_bits = encode_ascii7(params.key);
  std::vector<BenchRow> rows;
  rows.reserve(lengths.size());
  for (const std::size_t bits : lengths) {
    HarnessRng rng(seed, bits);
    const BitString message = random_bits(rng, bits);
    BenchRow row;
    row.message_bits = bits;
    row.median_seconds = median_hash_seconds(params.n, key_bits, message);
    row.seconds_per_mbit =
        row.median_seconds / (static_cast<double>(bits) / 1.0e6);
    row.doubling_ratio =
        rows.empty() ? std::numeric_limits<double>::quiet_NaN()
                     : row.median_seconds / rows.back().median_seconds;
    rows.push_back(row);
  }
  return rows;
}

std::string to_csv(const DiffusionReport& report) {
  std::string out =
      "n,msg_bits,trials,seed,exhaustive,b_min,b_max,b_mean,p_mean_pct,"
      "delta_b,delta_p_pct\n";
  append_row(out, "%zu,%zu,%zu,%llu,%d,%zu,%zu,%.6f,%.6f,%.6f,%.6f\n",
             report.n, report.msg_bits, report.trials,
             static_cast<unsigned long long>(report.seed),
             report.exhaustive ? 1 : 0, report.b_min, report.b_max,
             report.b_mean, report.p_mean_pct, report.delta_b,
             report.delta_p_pct);
  return out;
}

std::string histogram_csv(const DiffusionReport& report) {
  std::string out = "hamming_distance,count\n";
  for (std::size_t k = 0; k < report.histogram.size(); ++k) {
    if (report.histogram[k] != 0) {
      append_row(out, "%zu,%llu\n", k,
                 static_cast<unsigned long long>(report.histogram[k]));
    }
  }
  return out;
}

std::string to_csv(const SacReport& report) {
  std::string out =
      "digest_bits,size_samples,r,seed,j_mean,j_min,j_max,j_stddev\n";
  append_row(out, "%zu,%zu,%zu,%llu,%.6f,%.6f,%.6f,%.6f\n",
             report.digest_bits, report.sizes.size(), report.r,
             static_cast<unsigned long long>(report.seed), report.j_mean,
             report.j_min, report.j_max, report.j_stddev);
  return out;
}

std::string to_csv(const RepartitionExport& report) {
  std::string out = "stream,symbol,position\n";
  for (const auto& row : report.source) {
    append_row(out, "message,%d,%zu\n", row.symbol, row.position);
  }
  for (const auto& row : report.digest) {
    append_row(out, "digest,%d,%zu\n", row.symbol, row.position);
  }
  return out;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
  std::string out =
      "message_bits,median_seconds,seconds_per_mbit,doubling_ratio\n";
  for (const auto& row : rows) {
    if (std::isnan(row.doubling_ratio)) {
      append_row(out, "%zu,%.9f,%.9f,\n", row.message_bits,
                 row.median_seconds, row.seconds_per_mbit);
    } else {
      append_row(out, "%zu,%.9f,%.9f,%.3f\n", row.message_bits,
                 row.median_seconds, row.seconds_per_mbit,
                 row.doubling_ratio);
    }
  }
  return out;
}

}  // namespace chaoshash
