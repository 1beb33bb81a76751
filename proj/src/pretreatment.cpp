// Copyright (c) 2026 The chaoshash authors
// SPDX-License-Identifier: Apache-2.0
#include "chaoshash/pretreatment.hpp"

#include <bit>
#include <numeric>
#include <string>

#include "chaoshash/errors.hpp"

namespace chaoshash {

BitString pad_and_mark(const BitString& message_bits) {
  if (message_bits.empty()) {
    throw DomainError("cannot pre-treat an empty message");
  }
  BitString out = message_bits;
  out.push_back(true);
  const std::uint64_t marked_length = out.size();
  out.append(BitString::from_uint64(marked_length,
                                    std::bit_width(marked_length)));
  if (out.size() % 2 == 0) out.push_back(true);
  return out;
}

BitString mirror(const BitString& bits) {
  BitString out = bits;
  out.append(bits.reversed());
  return out;
}

BitString expand_to_multiple(const BitString& bits, std::size_t modulus) {
  if (bits.empty()) throw DomainError("cannot expand an empty bit string");
  if (modulus == 0) throw DomainError("expansion modulus must be positive");
  const std::size_t target =
      modulus * ((bits.size() + modulus - 1) / modulus);
  return bits.repeat_to(target);
}

BitString expand_to_512(const BitString& bits) {
  return expand_to_multiple(bits, 512);
}

Configuration fold_xor(const BitString& d, std::size_t n) {
  if (n == 0) throw DomainError("fold size must be positive");
  if (d.size() == 0 || d.size() % n != 0) {
    throw DomainError("fold requires a length divisible by " +
                      std::to_string(n) + ", got " +
                      std::to_string(d.size()));
  }
  BitString acc = d.prefix(n);
  for (std::size_t pos = n; pos < d.size(); pos += n) {
    acc.inplace_xor_slice(d, pos);
  }
  return Configuration(std::move(acc));
}

std::size_t expansion_modulus(std::size_t n) {
  if (n == 0) throw DomainError("digest size must be positive");
  return std::lcm(std::size_t{512}, 2 * n);
}

NormalizedMessage normalize_bits(const BitString& message_bits,
                                 std::size_t n) {
  if (n < 4 || n % 4 != 0) {
    throw DomainError("digest size must be a positive multiple of 4, got " +
                      std::to_string(n));
  }
  if (message_bits.empty()) {
    throw DomainError("cannot pre-treat an empty message");
  }
  const std::size_t modulus = expansion_modulus(n);
  // Marking, mirroring and expansion all build one buffer; equal bit for
  // bit to expand_to_multiple(mirror(pad_and_mark(msg)), modulus).
  const std::uint64_t marked_length =
      message_bits.size() + 1 +
      std::bit_width(static_cast<std::uint64_t>(message_bits.size()) + 1);
  const std::size_t mirrored_size =
      2 * (marked_length % 2 == 0 ? marked_length + 1 : marked_length);
  const std::size_t target =
      modulus * ((mirrored_size + modulus - 1) / modulus);
  BitString d;
  d.reserve(target);
  d.append(message_bits);
  d.push_back(true);
  d.append(BitString::from_uint64(
      message_bits.size() + 1,
      std::bit_width(static_cast<std::uint64_t>(message_bits.size()) + 1)));
  if (d.size() % 2 == 0) d.push_back(true);
  d.mirror_in_place();
  d.extend_cyclic_to(target);
  Configuration x0 = fold_xor(d, n);
  return NormalizedMessage{std::move(d), std::move(x0)};
}

NormalizedMessage normalize(std::string_view message, std::size_t n) {
  return normalize_bits(encode_ascii7(message), n);
}

}  // namespace chaoshash
