// Copyright (c) 2026 The chaoshash authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string_view>

#include "chaoshash/bitstring.hpp"

namespace chaoshash {

/// Result of normalizing a message: the expanded string D (length a
/// positive multiple of 512) and the initial configuration x0, the
/// exclusive-or fold of D into n-bit blocks.
struct NormalizedMessage {
  BitString d;
  Configuration x0;
};

/// Appends the marker bit '1', then the minimal-width binary value of the
/// new length (most significant bit first, no leading zeros), then one
/// more '1' if and only if the length at that point is even. The final
/// length is therefore always odd. Throws DomainError on empty input.
BitString pad_and_mark(const BitString& message_bits);

/// The string followed by its own reversal; always a palindrome of twice
/// the input length.
BitString mirror(const BitString& bits);

/// Cyclically extends `bits` to the smallest multiple of `modulus` that is
/// >= size() (the size itself when it is already a positive multiple).
BitString expand_to_multiple(const BitString& bits, std::size_t modulus);

/// expand_to_multiple with the 512-bit block size used at n = 256.
BitString expand_to_512(const BitString& bits);

/// Exclusive-or of the consecutive n-bit blocks of `d`, left to right.
/// Throws DomainError unless n divides the length of `d`.
Configuration fold_xor(const BitString& d, std::size_t n);

/// Expansion block size for digest size n: the least common multiple of
/// 512 and 2n, so that D always splits into an even number (at least two)
/// of n-bit blocks while staying a multiple of 512.
std::size_t expansion_modulus(std::size_t n);

/// Full pre-treatment from an already encoded bit stream:
/// pad_and_mark, mirror, expand, fold. Requires a non-empty stream and
/// n >= 4 divisible by 4.
NormalizedMessage normalize_bits(const BitString& message_bits,
                                 std::size_t n = 256);

/// Full pre-treatment of a character message: encode_ascii7 followed by
/// normalize_bits.
NormalizedMessage normalize(std::string_view message, std::size_t n = 256);

}  // namespace chaoshash
