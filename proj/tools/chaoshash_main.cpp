// Copyright (c) 2026 The chaoshash authors
// SPDX-License-Identifier: Apache-2.0
//
// chaoshash command line: keyed hashing, post-treatment, bijectivity
// oracles, and the statistical evaluation battery. Exit codes: 0 success,
// 1 usage error, 2 data error (non-7-bit input, dimension mismatch, ...).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chaoshash/analysis.hpp"
#include "chaoshash/dynamics.hpp"
#include "chaoshash/errors.hpp"
#include "chaoshash/hash.hpp"
#include "chaoshash/metric.hpp"
#include "chaoshash/pretreatment.hpp"
#include "chaoshash/strategy.hpp"

namespace {

using namespace chaoshash;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

// Command-line level mistakes, as opposed to bad input data.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KeyOptions {
  std::string text;
  std::string hex;
  std::string env;
};

void add_key_flags(CLI::App* cmd, KeyOptions& key, bool allow_hex) {
  auto* text = cmd->add_option("--key", key.text, "Key as 7-bit text");
  auto* env = cmd->add_option("--key-env", key.env,
                              "Environment variable holding the key");
  text->excludes(env);
  env->excludes(text);
  if (allow_hex) {
    auto* hex = cmd->add_option("--key-hex", key.hex, "Key as hex digits");
    hex->excludes(text);
    hex->excludes(env);
    text->excludes(hex);
    env->excludes(hex);
  }
}

// Resolved key bits; `text_out` is set only for text-sourced keys.
BitString resolve_key(const KeyOptions& key, std::string* text_out) {
  if (!key.hex.empty()) return BitString::from_hex(key.hex);
  std::string text = key.text;
  if (!key.env.empty()) {
    const char* value = std::getenv(key.env.c_str());
    if (value == nullptr || *value == '\0') {
      throw UsageError("environment variable '" + key.env +
                       "' is empty or unset");
    }
    text = value;
  }
  if (text.empty()) {
    throw UsageError("a key is required (--key, --key-hex or --key-env)");
  }
  if (text_out != nullptr) *text_out = text;
  return encode_ascii7(text);
}

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path.empty() || path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw DomainError("cannot open input file '" + path + "'");
    buffer << file.rdbuf();
  }
  return buffer.str();
}

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot open output file '" + path + "'");
  file << payload;
}

ChaosHashParams experiment_params(std::size_t n, const KeyOptions& key) {
  ChaosHashParams params;
  params.n = n;
  params.key = key.text.empty() && key.env.empty() && key.hex.empty()
                   ? std::string("my key")
                   : std::string();
  if (params.key.empty()) {
    resolve_key(key, &params.key);
    if (params.key.empty()) {
      throw UsageError("experiment commands need a text key");
    }
  }
  return params;
}

BooleanMap make_map(const std::string& name, std::size_t n,
                    const std::string& mask_bits) {
  if (name == "negation") return maps::negation(n);
  if (name == "identity") return maps::identity(n);
  if (name == "constant-zero") return maps::constant_zero(n);
  if (name == "rotate-left") return maps::rotate_left(n);
  if (name == "toggle-rotation") {
    BitString mask;
    if (mask_bits.empty()) {
      // Alternating default pattern.
      for (std::size_t i = 0; i < n; ++i) mask.push_back(i % 2 == 0);
    } else {
      mask = BitString::from_string(mask_bits);
    }
    return maps::toggle_rotation(n, std::move(mask));
  }
  throw DomainError("unknown map '" + name + "'");
}

Strategy random_strategy(std::size_t n, std::size_t length,
                         std::uint64_t seed) {
  HarnessRng rng(seed, 0);
  Strategy strategy;
  strategy.n = n;
  strategy.indices.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    strategy.indices.push_back(1 + rng.below(static_cast<std::uint32_t>(n)));
  }
  return strategy;
}

int run(int argc, char** argv) {
  CLI::App app{"chaoshash: keyed hashing by asynchronous Boolean "
               "iterations, with its evaluation battery"};
  app.require_subcommand(1);

  // hash
  auto* hash_cmd = app.add_subcommand("hash", "Hash a message");
  KeyOptions hash_key;
  add_key_flags(hash_cmd, hash_key, /*allow_hex=*/true);
  std::size_t hash_n = 256;
  std::string hash_file;
  hash_cmd->add_option("--n", hash_n, "Digest size in bits (multiple of 4)");
  hash_cmd->add_option("--file", hash_file,
                       "Input file (standard input when omitted)");

  // posttreat
  auto* post_cmd = app.add_subcommand(
      "posttreat", "Post-treat a message with an inner keyed hash");
  std::string post_k1, post_k2, post_inner = "chaos", post_file;
  std::size_t post_n = 256, post_iters = 0;
  post_cmd->add_option("--k1", post_k1, "Inner-hash key, hex")->required();
  post_cmd->add_option("--k2", post_k2, "Strategy seed, hex")->required();
  post_cmd->add_option("--iters", post_iters,
                       "Iteration count N (default 2n)");
  post_cmd->add_option("--inner", post_inner,
                       "Inner hash: chaos or xor-fold");
  post_cmd->add_option("--n", post_n, "Digest size in bits");
  post_cmd->add_option("--file", post_file,
                       "Input file (standard input when omitted)");

  // verify-bijectivity
  auto* verify_cmd = app.add_subcommand(
      "verify-bijectivity",
      "Exhaustively check that iterating a map permutes the state space");
  std::size_t verify_n = 8, verify_len = 50;
  std::uint64_t verify_seed = 1;
  std::string verify_map = "negation", verify_mask;
  verify_cmd->add_option("--n", verify_n, "State size in bits (<= 16)");
  verify_cmd->add_option("--map", verify_map,
                         "negation, identity, toggle-rotation, "
                         "constant-zero or rotate-left");
  verify_cmd->add_option("--mask", verify_mask,
                         "Toggle mask as a 0/1 string (toggle-rotation)");
  verify_cmd->add_option("--strategy-len", verify_len,
                         "Random strategy length");
  verify_cmd->add_option("--seed", verify_seed, "Strategy seed");

  // diffusion
  auto* diff_cmd = app.add_subcommand(
      "diffusion", "One-bit-flip diffusion statistics (CSV)");
  KeyOptions diff_key;
  add_key_flags(diff_cmd, diff_key, /*allow_hex=*/false);
  std::size_t diff_n = 256, diff_bits = 1000, diff_trials = 10000;
  std::uint64_t diff_seed = 1;
  bool diff_exhaustive = false;
  unsigned diff_threads = 0;
  std::string diff_out, diff_hist_out;
  diff_cmd->add_option("--n", diff_n, "Digest size in bits");
  diff_cmd->add_option("--msg-bits", diff_bits,
                       "Message size in bits (multiple of 8)");
  diff_cmd->add_option("--trials", diff_trials, "Trial count");
  diff_cmd->add_option("--seed", diff_seed, "Experiment seed");
  diff_cmd->add_flag("--exhaustive", diff_exhaustive,
                     "Flip every bit of one message instead of sampling");
  diff_cmd->add_option("--threads", diff_threads,
                       "Worker threads (0 = all cores)");
  diff_cmd->add_option("--out", diff_out, "Output CSV path");
  diff_cmd->add_option("--histogram-out", diff_hist_out,
                       "Optional per-distance histogram CSV path");

  // sac
  auto* sac_cmd = app.add_subcommand(
      "sac", "Strict-avalanche-criterion dependence matrix summary (CSV)");
  KeyOptions sac_key;
  add_key_flags(sac_cmd, sac_key, /*allow_hex=*/false);
  std::size_t sac_n = 256, sac_sizes = 100, sac_r = 1000;
  std::uint64_t sac_seed = 1;
  unsigned sac_threads = 0;
  std::string sac_out;
  sac_cmd->add_option("--n", sac_n, "Digest size in bits");
  sac_cmd->add_option("--sizes", sac_sizes,
                      "Number of sampled message sizes in [1, 1000]");
  sac_cmd->add_option("--r", sac_r, "Messages per size");
  sac_cmd->add_option("--seed", sac_seed, "Experiment seed");
  sac_cmd->add_option("--threads", sac_threads,
                      "Worker threads (0 = all cores)");
  sac_cmd->add_option("--out", sac_out, "Output CSV path");

  // repartition
  auto* rep_cmd = app.add_subcommand(
      "repartition", "Symbol/position tables for a text and its digest");
  KeyOptions rep_key;
  add_key_flags(rep_cmd, rep_key, /*allow_hex=*/false);
  std::size_t rep_n = 256;
  std::string rep_file, rep_out;
  rep_cmd->add_option("--n", rep_n, "Digest size in bits");
  rep_cmd->add_option("--file", rep_file,
                      "Input file (standard input when omitted)");
  rep_cmd->add_option("--out", rep_out, "Output CSV path");

  // bench
  auto* bench_cmd = app.add_subcommand(
      "bench", "Hash wall-time scaling over message lengths (CSV)");
  KeyOptions bench_key;
  add_key_flags(bench_cmd, bench_key, /*allow_hex=*/false);
  std::size_t bench_n = 256;
  std::uint64_t bench_seed = 1;
  std::vector<std::size_t> bench_lengths;
  std::string bench_out;
  bench_cmd->add_option("--n", bench_n, "Digest size in bits");
  bench_cmd
      ->add_option("--lengths", bench_lengths,
                   "Comma-separated message lengths in bits, increasing")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--seed", bench_seed, "Message seed");
  bench_cmd->add_option("--out", bench_out, "Output CSV path");

  // strategy-dump
  auto* strat_cmd = app.add_subcommand(
      "strategy-dump",
      "Dump the strategy for a message/key pair as decimal indices");
  KeyOptions strat_key;
  add_key_flags(strat_cmd, strat_key, /*allow_hex=*/true);
  std::size_t strat_n = 256, strat_len = 0;
  std::string strat_file;
  strat_cmd->add_option("--n", strat_n, "Digest size in bits");
  strat_cmd->add_option("--length", strat_len,
                        "Strategy length (default 2n)");
  strat_cmd->add_option("--file", strat_file,
                        "Input file (standard input when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n"
              << "usage: chaoshash <subcommand> --help" << std::endl;
    return kExitUsage;
  }

  try {
    if (hash_cmd->parsed()) {
      const BitString key_bits = resolve_key(hash_key, nullptr);
      const std::string message = read_input(hash_file);
      const Configuration digest =
          chaos_hash_config(hash_n, key_bits, encode_ascii7(message));
      std::cout << to_hex(digest) << "\n";
    } else if (post_cmd->parsed()) {
      if (post_iters == 0) post_iters = 2 * post_n;
      PostTreatKey key{BitString::from_hex(post_k1),
                       BitString::from_hex(post_k2), post_iters};
      const InnerHash inner_hash =
          post_inner == "chaos"      ? inner::chaos(post_n)
          : post_inner == "xor-fold" ? inner::xor_fold(post_n)
                                     : throw DomainError("unknown inner hash '" +
                                                         post_inner + "'");
      const std::string message = read_input(post_file);
      const Configuration digest =
          post_treat(inner_hash, key, maps::negation(post_n),
                     encode_ascii7(message));
      std::cout << to_hex(digest) << "\n";
    } else if (verify_cmd->parsed()) {
      const BooleanMap map = make_map(verify_map, verify_n, verify_mask);
      const Strategy strategy =
          random_strategy(verify_n, verify_len, verify_seed);
      const bool ok = check_bijective_iteration(map, strategy);
      std::cout << "bijective: " << (ok ? "true" : "false") << "\n";
    } else if (diff_cmd->parsed()) {
      const ChaosHashParams params = experiment_params(diff_n, diff_key);
      const DiffusionReport report =
          diffusion_test(params, diff_bits, diff_trials, diff_seed,
                         diff_exhaustive, diff_threads);
      write_output(diff_out, to_csv(report));
      if (!diff_hist_out.empty()) {
        write_output(diff_hist_out, histogram_csv(report));
      }
    } else if (sac_cmd->parsed()) {
      const ChaosHashParams params = experiment_params(sac_n, sac_key);
      const SacReport report =
          sac_test(params, sac_sizes, sac_r, sac_seed, sac_threads);
      write_output(sac_out, to_csv(report));
    } else if (rep_cmd->parsed()) {
      const ChaosHashParams params = experiment_params(rep_n, rep_key);
      const std::string text = read_input(rep_file);
      write_output(rep_out, to_csv(repartition_export(params, text)));
    } else if (bench_cmd->parsed()) {
      const ChaosHashParams params = experiment_params(bench_n, bench_key);
      write_output(bench_out,
                   to_csv(scaling_benchmark(params, bench_lengths,
                                            bench_seed)));
    } else if (strat_cmd->parsed()) {
      const BitString key_bits = resolve_key(strat_key, nullptr);
      if (strat_len == 0) strat_len = 2 * strat_n;
      const std::string message = read_input(strat_file);
      const NormalizedMessage normalized =
          normalize(message, strat_n);
      const SeedMaterial seed = derive_seed_bits(normalized.d, key_bits);
      const Strategy strategy = gen_strategy(seed, strat_n, strat_len);
      std::string line;
      for (std::size_t i = 0; i < strategy.size(); ++i) {
        if (i != 0) line += ',';
        line += std::to_string(strategy.indices[i]);
      }
      std::cout << line << "\n";
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "usage: chaoshash <subcommand> --help" << std::endl;
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitData;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
