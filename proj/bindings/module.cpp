// Copyright (c) 2026 The chaoshash authors
// SPDX-License-Identifier: Apache-2.0
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "chaoshash/analysis.hpp"
#include "chaoshash/dynamics.hpp"
#include "chaoshash/errors.hpp"
#include "chaoshash/hash.hpp"
#include "chaoshash/metric.hpp"
#include "chaoshash/pretreatment.hpp"
#include "chaoshash/strategy.hpp"

namespace py = pybind11;
using namespace chaoshash;

namespace {

BitString bits_from_string(const std::string& bits) {
  return BitString::from_string(bits);
}

BooleanMap map_by_name(const std::string& name, std::size_t n) {
  if (name == "negation") return maps::negation(n);
  if (name == "identity") return maps::identity(n);
  if (name == "constant-zero") return maps::constant_zero(n);
  if (name == "rotate-left") return maps::rotate_left(n);
  throw DomainError("unknown map '" + name + "'");
}

py::object rational_to_fraction(const Rational& value) {
  const py::object fraction =
      py::module_::import("fractions").attr("Fraction");
  const py::object num = py::cast(numerator(value).str());
  const py::object den = py::cast(denominator(value).str());
  return fraction(py::int_(py::str(num)), py::int_(py::str(den)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Keyed hashing by asynchronous Boolean iterations";

  py::register_exception<Error>(m, "ChaosHashError", PyExc_ValueError);

  m.def(
      "chaos_hash",
      [](const std::string& key, const std::string& message, std::size_t n) {
        return chaos_hash(ChaosHashParams{n, key}, message);
      },
      py::arg("key"), py::arg("message"), py::arg("n") = 256,
      "Hex digest of a 7-bit message under a 7-bit text key.");

  m.def(
      "chaos_hash_bits",
      [](const std::string& key_bits, const std::string& message_bits,
         std::size_t n) {
        return to_hex(chaos_hash_config(n, bits_from_string(key_bits),
                                        bits_from_string(message_bits)));
      },
      py::arg("key_bits"), py::arg("message_bits"), py::arg("n") = 256,
      "Hex digest from '0'/'1' strings for the key and the message.");

  m.def(
      "encode_ascii7",
      [](const std::string& text) { return encode_ascii7(text).to_string(); },
      py::arg("text"), "7-bit encoding as a '0'/'1' string.");

  m.def(
      "normalize",
      [](const std::string& message, std::size_t n) {
        const NormalizedMessage norm = normalize(message, n);
        return py::make_tuple(norm.d.to_string(), to_hex(norm.x0));
      },
      py::arg("message"), py::arg("n") = 256,
      "Pre-treatment: returns (D bits, x0 hex).");

  m.def(
      "strategy_indices",
      [](const std::string& key, const std::string& message, std::size_t n,
         std::size_t length) {
        const NormalizedMessage norm = normalize(message, n);
        const Strategy strategy =
            gen_strategy(derive_seed(norm.d, key), n,
                         length == 0 ? 2 * n : length);
        return strategy.indices;
      },
      py::arg("key"), py::arg("message"), py::arg("n") = 256,
      py::arg("length") = 0,
      "The index sequence driving the iterations (default length 2n).");

  m.def(
      "post_treat",
      [](const std::string& k1_hex, const std::string& k2_hex,
         std::size_t iterations, const std::string& message, std::size_t n,
         const std::string& inner_name) {
        const PostTreatKey key{BitString::from_hex(k1_hex),
                               BitString::from_hex(k2_hex), iterations};
        const InnerHash inner_hash = inner_name == "chaos"
                                         ? inner::chaos(n)
                                         : inner::xor_fold(n);
        return to_hex(post_treat(inner_hash, key, maps::negation(n),
                                 encode_ascii7(message)));
      },
      py::arg("k1_hex"), py::arg("k2_hex"), py::arg("iterations"),
      py::arg("message"), py::arg("n") = 256, py::arg("inner") = "chaos",
      "Post-treated digest of a message (negation map).");

  m.def(
      "post_treat_digest",
      [](const std::string& k1_hex, const std::string& k2_hex,
         std::size_t iterations, const std::string& digest_hex) {
        const BitString digest_bits = BitString::from_hex(digest_hex);
        const PostTreatKey key{BitString::from_hex(k1_hex),
                               BitString::from_hex(k2_hex), iterations};
        return to_hex(post_treat_digest(key,
                                        maps::negation(digest_bits.size()),
                                        Configuration(digest_bits)));
      },
      py::arg("k1_hex"), py::arg("k2_hex"), py::arg("iterations"),
      py::arg("digest_hex"),
      "The keyed permutation applied to an existing digest.");

  m.def(
      "invert_post_treat",
      [](const std::string& k1_hex, const std::string& k2_hex,
         std::size_t iterations, const std::string& digest_hex) {
        const BitString digest_bits = BitString::from_hex(digest_hex);
        const PostTreatKey key{BitString::from_hex(k1_hex),
                               BitString::from_hex(k2_hex), iterations};
        return to_hex(invert_post_treat(key,
                                        maps::negation(digest_bits.size()),
                                        Configuration(digest_bits)));
      },
      py::arg("k1_hex"), py::arg("k2_hex"), py::arg("iterations"),
      py::arg("digest_hex"), "Inverse of post_treat_digest.");

  m.def(
      "check_bijective_iteration",
      [](const std::string& map_name, std::size_t n,
         const std::vector<std::uint32_t>& strategy_indices) {
        Strategy strategy;
        strategy.n = n;
        strategy.indices = strategy_indices;
        return check_bijective_iteration(map_by_name(map_name, n), strategy);
      },
      py::arg("map"), py::arg("n"), py::arg("strategy"),
      "Exhaustive permutation check of the iterated map (n <= 16).");

  m.def(
      "hamming",
      [](const std::string& hex_a, const std::string& hex_b) {
        return hamming_distance(Configuration(BitString::from_hex(hex_a)),
                                Configuration(BitString::from_hex(hex_b)));
      },
      py::arg("digest_a"), py::arg("digest_b"),
      "Hamming distance between two hex digests.");

  m.def(
      "strategy_distance",
      [](const std::vector<std::uint32_t>& a,
         const std::vector<std::uint32_t>& b, std::size_t n,
         std::size_t prefix_len) {
        Strategy sa;
        sa.indices = a;
        sa.n = n;
        Strategy sb;
        sb.indices = b;
        sb.n = n;
        return rational_to_fraction(d_s(sa, sb, prefix_len));
      },
      py::arg("a"), py::arg("b"), py::arg("n"), py::arg("prefix_len"),
      "Exact strategy distance as a fractions.Fraction.");

  py::class_<DiffusionReport>(m, "DiffusionReport")
      .def_readonly("n", &DiffusionReport::n)
      .def_readonly("msg_bits", &DiffusionReport::msg_bits)
      .def_readonly("trials", &DiffusionReport::trials)
      .def_readonly("seed", &DiffusionReport::seed)
      .def_readonly("exhaustive", &DiffusionReport::exhaustive)
      .def_readonly("b_min", &DiffusionReport::b_min)
      .def_readonly("b_max", &DiffusionReport::b_max)
      .def_readonly("b_mean", &DiffusionReport::b_mean)
      .def_readonly("p_mean_pct", &DiffusionReport::p_mean_pct)
      .def_readonly("delta_b", &DiffusionReport::delta_b)
      .def_readonly("delta_p_pct", &DiffusionReport::delta_p_pct)
      .def_readonly("histogram", &DiffusionReport::histogram)
      .def("csv", [](const DiffusionReport& r) { return to_csv(r); });

  py::class_<SacReport>(m, "SacReport")
      .def_readonly("digest_bits", &SacReport::digest_bits)
      .def_readonly("r", &SacReport::r)
      .def_readonly("seed", &SacReport::seed)
      .def_readonly("sizes", &SacReport::sizes)
      .def_readonly("j_mean", &SacReport::j_mean)
      .def_readonly("j_min", &SacReport::j_min)
      .def_readonly("j_max", &SacReport::j_max)
      .def_readonly("j_stddev", &SacReport::j_stddev)
      .def("csv", [](const SacReport& r) { return to_csv(r); });

  m.def(
      "diffusion_test",
      [](const std::string& key, std::size_t n, std::size_t msg_bits,
         std::size_t trials, std::uint64_t seed, bool exhaustive,
         unsigned threads) {
        return diffusion_test(ChaosHashParams{n, key}, msg_bits, trials, seed,
                              exhaustive, threads);
      },
      py::arg("key") = "my key", py::arg("n") = 256,
      py::arg("msg_bits") = 1000, py::arg("trials") = 10000,
      py::arg("seed") = 1, py::arg("exhaustive") = false,
      py::arg("threads") = 0,
      py::call_guard<py::gil_scoped_release>(),
      "One-bit-flip diffusion statistics.");

  m.def(
      "sac_test",
      [](const std::string& key, std::size_t n, std::size_t sizes,
         std::size_t r, std::uint64_t seed, unsigned threads) {
        return sac_test(ChaosHashParams{n, key}, sizes, r, seed, threads);
      },
      py::arg("key") = "my key", py::arg("n") = 256, py::arg("sizes") = 100,
      py::arg("r") = 1000, py::arg("seed") = 1, py::arg("threads") = 0,
      py::call_guard<py::gil_scoped_release>(),
      "Strict-avalanche-criterion dependence matrix summary.");

  m.def(
      "repartition",
      [](const std::string& key, const std::string& text, std::size_t n) {
        const RepartitionExport report =
            repartition_export(ChaosHashParams{n, key}, text);
        std::vector<std::pair<int, std::size_t>> source, digest;
        for (const auto& row : report.source) {
          source.emplace_back(row.symbol, row.position);
        }
        for (const auto& row : report.digest) {
          digest.emplace_back(row.symbol, row.position);
        }
        return py::make_tuple(source, digest);
      },
      py::arg("key"), py::arg("text"), py::arg("n") = 256,
      "Symbol/position rows for a text and its digest.");

  m.attr("__version__") = "0.1.0";
}
