// Copyright (c) 2026 The chaoshash authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chaoshash {

/// Ordered bit sequence of arbitrary length.
///
/// Bits are indexed 0..size()-1 left to right; index 0 is the leftmost,
/// most significant position. Storage is packed 64-bit words, big-endian
/// within each word (bit i lives in word i/64 at in-word position
/// 63 - i%64), so word and nibble extraction follow the textual order of
/// to_string(). Unused tail bits of the last word are kept zero.
class BitString {
 public:
  BitString() = default;

  /// Parses a string of '0'/'1' characters.
  static BitString from_string(std::string_view bits);

  /// Parses hexadecimal digits, 4 bits per digit, most significant first.
  /// Accepts upper and lower case.
  static BitString from_hex(std::string_view hex);

  /// The `width` low-order bits of `value`, most significant first.
  static BitString from_uint64(std::uint64_t value, std::size_t width);

  static BitString zeros(std::size_t count);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool bit(std::size_t index) const;
  void set_bit(std::size_t index, bool value);
  void flip_bit(std::size_t index);

  void push_back(bool value);
  void append(const BitString& other);

  /// Equivalent to append(other.reversed()) without the temporary.
  /// `other` must not alias this string.
  void append_reversed(const BitString& other);

  /// Appends the string's own reversal: *this becomes this ∥ reverse(this),
  /// a palindrome of twice the size.
  void mirror_in_place();

  /// In-place cyclic extension to `length` >= size(): appended bit i
  /// equals bit i % (original size). Equivalent to repeat_to for growth.
  void extend_cyclic_to(std::size_t length);

  void reserve(std::size_t bit_count);

  /// Bits [pos, pos + count).
  BitString slice(std::size_t pos, std::size_t count) const;

  /// First `count` bits; count must not exceed size().
  BitString prefix(std::size_t count) const { return slice(0, count); }

  /// Bits in the opposite order; an involution.
  BitString reversed() const;

  /// Cyclic extension: bit i of the result equals bit i % size() of this
  /// string. Requires a non-empty string; `length` may be shorter than
  /// size(), in which case this is a plain prefix.
  BitString repeat_to(std::size_t length) const;

  /// Bitwise exclusive-or; throws LengthMismatchError unless sizes agree.
  BitString operator^(const BitString& other) const;

  /// XORs src[pos, pos + size()) into this string without allocating.
  void inplace_xor_slice(const BitString& src, std::size_t pos);

  /// XORs the cyclic extension of `pattern` over the whole string, i.e.
  /// bit i ^= pattern bit (i % pattern.size()).
  void inplace_xor_cyclic(const BitString& pattern);

  bool operator==(const BitString& other) const noexcept;

  bool all_zero() const noexcept;

  /// Number of set bits.
  std::size_t popcount() const noexcept;

  std::string to_string() const;

  /// Packed storage, valid until the next mutation. Tail bits are zero.
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  /// 32-bit word `index` in textual order (bits 32*index .. 32*index+31).
  std::uint32_t word32(std::size_t index) const;

 private:
  void mask_tail() noexcept;

  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

/// Fixed-size n-bit system state. Components are numbered 1..n as in the
/// strategy index range; component 1 is the leftmost bit.
class Configuration {
 public:
  /// Wraps `bits` as a configuration; requires at least one bit.
  explicit Configuration(BitString bits);

  static Configuration zeros(std::size_t n);

  std::size_t n() const noexcept { return bits_.size(); }
  const BitString& bits() const noexcept { return bits_; }

  bool component(std::size_t index) const;
  void set_component(std::size_t index, bool value);
  void flip_component(std::size_t index);

  bool operator==(const Configuration& other) const noexcept = default;

 private:
  BitString bits_;
};

/// 7-bit character encoding: each character contributes 7 bits, most
/// significant first. Throws EncodingError (with the 1-based position)
/// for bytes above 127.
BitString encode_ascii7(std::string_view text);

/// Uppercase hexadecimal rendering, one digit per 4 bits taken left to
/// right; requires n divisible by 4.
std::string to_hex(const Configuration& config);

/// Hamming distance; throws LengthMismatchError unless sizes agree.
std::size_t hamming_distance(const Configuration& a, const Configuration& b);

}  // namespace chaoshash
