// Copyright (c) 2026 The chaoshash authors
// SPDX-License-Identifier: Apache-2.0
#include "chaoshash/bitstring.hpp"

#include <algorithm>
#include <bit>

#include "chaoshash/errors.hpp"

namespace chaoshash {

namespace {

constexpr std::uint64_t bit_mask(std::size_t index) {
  return std::uint64_t{1} << (63 - (index & 63));
}

std::uint64_t reverse_bits64(std::uint64_t x) {
#if defined(__has_builtin) && __has_builtin(__builtin_bitreverse64)
  return __builtin_bitreverse64(x);
#else
  x = ((x & 0x00000000FFFFFFFFull) << 32) | (x >> 32);
  x = ((x & 0x0000FFFF0000FFFFull) << 16) | ((x >> 16) & 0x0000FFFF0000FFFFull);
  x = ((x & 0x00FF00FF00FF00FFull) << 8) | ((x >> 8) & 0x00FF00FF00FF00FFull);
  x = ((x & 0x0F0F0F0F0F0F0F0Full) << 4) | ((x >> 4) & 0x0F0F0F0F0F0F0F0Full);
  x = ((x & 0x3333333333333333ull) << 2) | ((x >> 2) & 0x3333333333333333ull);
  x = ((x & 0x5555555555555555ull) << 1) | ((x >> 1) & 0x5555555555555555ull);
  return x;
#endif
}

int hex_digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

}  // namespace

void BitString::mask_tail() noexcept {
  const std::size_t used = size_ & 63;
  if (used != 0 && !words_.empty()) {
    words_.back() &= ~std::uint64_t{0} << (64 - used);
  }
}

BitString BitString::from_string(std::string_view bits) {
  BitString out;
  out.words_.assign((bits.size() + 63) / 64, 0);
  out.size_ = bits.size();
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const char c = bits[i];
    if (c == '1') {
      out.words_[i >> 6] |= bit_mask(i);
    } else if (c != '0') {
      throw DomainError("bit string literal may contain only '0' and '1'");
    }
  }
  return out;
}

BitString BitString::from_hex(std::string_view hex) {
  BitString out;
  out.words_.assign((4 * hex.size() + 63) / 64, 0);
  out.size_ = 4 * hex.size();
  for (std::size_t i = 0; i < hex.size(); ++i) {
    const int v = hex_digit_value(hex[i]);
    if (v < 0) {
      throw DomainError("invalid hexadecimal digit at position " +
                        std::to_string(i + 1));
    }
    out.words_[(4 * i) >> 6] |=
        static_cast<std::uint64_t>(v) << (60 - 4 * (i & 15));
  }
  return out;
}

BitString BitString::from_uint64(std::uint64_t value, std::size_t width) {
  if (width > 64) throw DomainError("from_uint64 width exceeds 64");
  BitString out;
  out.size_ = width;
  if (width > 0) {
    out.words_.push_back(width == 64 ? value : value << (64 - width));
  }
  out.mask_tail();
  return out;
}

BitString BitString::zeros(std::size_t count) {
  BitString out;
  out.words_.assign((count + 63) / 64, 0);
  out.size_ = count;
  return out;
}

bool BitString::bit(std::size_t index) const {
  if (index >= size_) throw DomainError("bit index out of range");
  return (words_[index >> 6] & bit_mask(index)) != 0;
}

void BitString::set_bit(std::size_t index, bool value) {
  if (index >= size_) throw DomainError("bit index out of range");
  if (value) {
    words_[index >> 6] |= bit_mask(index);
  } else {
    words_[index >> 6] &= ~bit_mask(index);
  }
}

void BitString::flip_bit(std::size_t index) {
  if (index >= size_) throw DomainError("bit index out of range");
  words_[index >> 6] ^= bit_mask(index);
}

void BitString::push_back(bool value) {
  if ((size_ & 63) == 0) words_.push_back(0);
  ++size_;
  if (value) words_.back() |= bit_mask(size_ - 1);
}

void BitString::append(const BitString& other) {
  if (other.size_ == 0) return;
  const unsigned shift = static_cast<unsigned>(size_ & 63);
  const std::size_t new_size = size_ + other.size_;
  if (shift == 0) {
    words_.insert(words_.end(), other.words_.begin(), other.words_.end());
  } else {
    const unsigned upshift = 64 - shift;
    words_.reserve((new_size + 63) / 64 + 1);
    for (const std::uint64_t w : other.words_) {
      words_.back() |= w >> shift;
      words_.push_back(w << upshift);
    }
  }
  size_ = new_size;
  words_.resize((size_ + 63) / 64);
  mask_tail();
}

void BitString::append_reversed(const BitString& other) {
  if (other.size_ == 0) return;
  const std::size_t count = other.words_.size();
  const unsigned pad = static_cast<unsigned>(count * 64 - other.size_);
  const auto reversed_word = [&](std::size_t j) -> std::uint64_t {
    const std::uint64_t hi = reverse_bits64(other.words_[count - 1 - j]);
    if (pad == 0) return hi;
    const std::uint64_t lo =
        (j + 1 < count) ? reverse_bits64(other.words_[count - 2 - j]) : 0;
    return (hi << pad) | (lo >> (64 - pad));
  };
  const unsigned shift = static_cast<unsigned>(size_ & 63);
  const std::size_t new_size = size_ + other.size_;
  words_.reserve((new_size + 63) / 64 + 1);
  if (shift == 0) {
    for (std::size_t j = 0; j < count; ++j) words_.push_back(reversed_word(j));
  } else {
    const unsigned upshift = 64 - shift;
    for (std::size_t j = 0; j < count; ++j) {
      const std::uint64_t w = reversed_word(j);
      words_.back() |= w >> shift;
      words_.push_back(w << upshift);
    }
  }
  size_ = new_size;
  words_.resize((size_ + 63) / 64);
  mask_tail();
}

void BitString::mirror_in_place() {
  if (size_ == 0) return;
  const std::size_t count = words_.size();
  const unsigned pad = static_cast<unsigned>(count * 64 - size_);
  const unsigned shift = static_cast<unsigned>(size_ & 63);
  const std::size_t new_size = 2 * size_;
  // Capacity is reserved up front so the source words [0, count) stay in
  // place; each is read before the tail word it feeds is written.
  words_.reserve((new_size + 63) / 64 + 1);
  const auto reversed_word = [&](std::size_t j) -> std::uint64_t {
    const std::uint64_t hi = reverse_bits64(words_[count - 1 - j]);
    if (pad == 0) return hi;
    const std::uint64_t lo =
        (j + 1 < count) ? reverse_bits64(words_[count - 2 - j]) : 0;
    return (hi << pad) | (lo >> (64 - pad));
  };
  if (shift == 0) {
    for (std::size_t j = 0; j < count; ++j) {
      words_.push_back(reversed_word(j));
    }
  } else {
    const unsigned upshift = 64 - shift;
    for (std::size_t j = 0; j < count; ++j) {
      const std::uint64_t w = reversed_word(j);
      words_.back() |= w >> shift;
      words_.push_back(w << upshift);
    }
  }
  size_ = new_size;
  words_.resize((size_ + 63) / 64);
  mask_tail();
}

void BitString::extend_cyclic_to(std::size_t length) {
  if (size_ == 0) {
    throw DomainError("cannot cyclically extend an empty bit string");
  }
  if (length < size_) {
    throw DomainError("cyclic extension cannot shrink the string");
  }
  const std::size_t period = size_;
  words_.reserve((length + 63) / 64 + 1);
  while (size_ < length) {
    const std::size_t take = std::min(period, length - size_);
    const unsigned shift = static_cast<unsigned>(size_ & 63);
    const std::size_t new_size = size_ + take;
    // The period block's words are stable: capacity is reserved up front
    // and indices below the current size are never touched while growing.
    if (shift == 0) {
      for (std::size_t j = 0; j * 64 < take; ++j) words_.push_back(words_[j]);
    } else {
      const unsigned upshift = 64 - shift;
      for (std::size_t j = 0; j * 64 < take; ++j) {
        const std::uint64_t w = words_[j];
        words_.back() |= w >> shift;
        words_.push_back(w << upshift);
      }
    }
    size_ = new_size;
    words_.resize((size_ + 63) / 64);
    mask_tail();
  }
}

void BitString::reserve(std::size_t bit_count) {
  words_.reserve((bit_count + 63) / 64 + 1);
}

BitString BitString::slice(std::size_t pos, std::size_t count) const {
  if (pos + count > size_) throw DomainError("slice out of range");
  BitString out;
  out.size_ = count;
  out.words_.assign((count + 63) / 64, 0);
  const std::size_t base = pos >> 6;
  const unsigned shift = static_cast<unsigned>(pos & 63);
  for (std::size_t j = 0; j < out.words_.size(); ++j) {
    std::uint64_t w = words_[base + j] << shift;
    if (shift != 0 && base + j + 1 < words_.size()) {
      w |= words_[base + j + 1] >> (64 - shift);
    }
    out.words_[j] = w;
  }
  out.mask_tail();
  return out;
}

BitString BitString::reversed() const {
  BitString out;
  out.size_ = size_;
  out.words_.assign(words_.size(), 0);
  if (size_ == 0) return out;
  std::vector<std::uint64_t> rev(words_.size());
  for (std::size_t j = 0; j < words_.size(); ++j) {
    rev[j] = reverse_bits64(words_[words_.size() - 1 - j]);
  }
  const unsigned pad = static_cast<unsigned>(words_.size() * 64 - size_);
  if (pad == 0) {
    out.words_ = std::move(rev);
  } else {
    for (std::size_t j = 0; j < rev.size(); ++j) {
      std::uint64_t w = rev[j] << pad;
      if (j + 1 < rev.size()) w |= rev[j + 1] >> (64 - pad);
      out.words_[j] = w;
    }
  }
  out.mask_tail();
  return out;
}

BitString BitString::repeat_to(std::size_t length) const {
  if (size_ == 0) throw DomainError("cannot cyclically extend an empty bit string");
  if (length <= size_) return prefix(length);
  BitString out;
  out.words_.reserve((length + 63) / 64 + 1);
  while (out.size_ + size_ <= length) out.append(*this);
  if (out.size_ < length) out.append(prefix(length - out.size_));
  return out;
}

BitString BitString::operator^(const BitString& other) const {
  if (size_ != other.size_) {
    throw LengthMismatchError("xor requires equal lengths (" +
                                  std::to_string(size_) + " vs " +
                                  std::to_string(other.size_) + ")",
                              size_, other.size_);
  }
  BitString out;
  out.size_ = size_;
  out.words_.resize(words_.size());
  for (std::size_t j = 0; j < words_.size(); ++j) {
    out.words_[j] = words_[j] ^ other.words_[j];
  }
  return out;
}

void BitString::inplace_xor_slice(const BitString& src, std::size_t pos) {
  if (pos + size_ > src.size_) {
    throw DomainError("xor slice out of range");
  }
  const std::size_t base = pos >> 6;
  const unsigned shift = static_cast<unsigned>(pos & 63);
  for (std::size_t j = 0; j < words_.size(); ++j) {
    std::uint64_t w = src.words_[base + j] << shift;
    if (shift != 0 && base + j + 1 < src.words_.size()) {
      w |= src.words_[base + j + 1] >> (64 - shift);
    }
    words_[j] ^= w;
  }
  mask_tail();
}

void BitString::inplace_xor_cyclic(const BitString& pattern) {
  if (pattern.size_ == 0) {
    throw DomainError("cyclic xor needs a non-empty pattern");
  }
  if (size_ == 0) return;
  // A tile of lcm(period, 64) bits makes the repetition word-aligned.
  std::size_t tile_bits = pattern.size_;
  while (tile_bits % 64 != 0 && tile_bits < size_) tile_bits += pattern.size_;
  const BitString tile = pattern.repeat_to(std::min(tile_bits, size_));
  if (tile.size_ == size_) {
    for (std::size_t j = 0; j < words_.size(); ++j) {
      words_[j] ^= tile.words_[j];
    }
    mask_tail();
    return;
  }
  const std::size_t tile_words = tile.words_.size();
  for (std::size_t j = 0; j < words_.size(); ++j) {
    words_[j] ^= tile.words_[j % tile_words];
  }
  mask_tail();
}

bool BitString::operator==(const BitString& other) const noexcept {
  return size_ == other.size_ && words_ == other.words_;
}

bool BitString::all_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

std::size_t BitString::popcount() const noexcept {
  std::size_t total = 0;
  for (const std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

std::string BitString::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if ((words_[i >> 6] & bit_mask(i)) != 0) out[i] = '1';
  }
  return out;
}

std::uint32_t BitString::word32(std::size_t index) const {
  if (32 * index >= size_) throw DomainError("word32 index out of range");
  const std::uint64_t w = words_[index >> 1];
  return static_cast<std::uint32_t>((index & 1) == 0 ? w >> 32 : w);
}

Configuration::Configuration(BitString bits) : bits_(std::move(bits)) {
  if (bits_.empty()) {
    throw DomainError("a configuration needs at least one bit");
  }
}

Configuration Configuration::zeros(std::size_t n) {
  return Configuration(BitString::zeros(n));
}

bool Configuration::component(std::size_t index) const {
  if (index < 1 || index > n()) {
    throw DomainError("component index " + std::to_string(index) +
                      " outside [1, " + std::to_string(n()) + "]");
  }
  return bits_.bit(index - 1);
}

void Configuration::set_component(std::size_t index, bool value) {
  if (index < 1 || index > n()) {
    throw DomainError("component index " + std::to_string(index) +
                      " outside [1, " + std::to_string(n()) + "]");
  }
  bits_.set_bit(index - 1, value);
}

void Configuration::flip_component(std::size_t index) {
  if (index < 1 || index > n()) {
    throw DomainError("component index " + std::to_string(index) +
                      " outside [1, " + std::to_string(n()) + "]");
  }
  bits_.flip_bit(index - 1);
}

BitString encode_ascii7(std::string_view text) {
  BitString out;
  std::size_t position = 1;
  for (const char c : text) {
    const auto code = static_cast<unsigned char>(c);
    if (code > 127) {
      throw EncodingError("byte value " + std::to_string(code) +
                              " at position " + std::to_string(position) +
                              " is outside the 7-bit range",
                          position);
    }
    for (int k = 6; k >= 0; --k) out.push_back(((code >> k) & 1) != 0);
    ++position;
  }
  return out;
}

std::string to_hex(const Configuration& config) {
  const std::size_t n = config.n();
  if (n % 4 != 0) {
    throw DomainError("hex rendering requires a size divisible by 4, got " +
                      std::to_string(n));
  }
  static constexpr char kDigits[] = "0123456789ABCDEF";
  const auto words = config.bits().words();
  std::string out(n / 4, '0');
  for (std::size_t j = 0; j < out.size(); ++j) {
    const unsigned v =
        static_cast<unsigned>(words[j >> 4] >> (60 - 4 * (j & 15))) & 0xF;
    out[j] = kDigits[v];
  }
  return out;
}

std::size_t hamming_distance(const Configuration& a, const Configuration& b) {
  if (a.n() != b.n()) {
    throw LengthMismatchError("hamming distance requires equal sizes (" +
                                  std::to_string(a.n()) + " vs " +
                                  std::to_string(b.n()) + ")",
                              a.n(), b.n());
  }
  const auto wa = a.bits().words();
  const auto wb = b.bits().words();
  std::size_t total = 0;
  for (std::size_t j = 0; j < wa.size(); ++j) {
    total += std::popcount(wa[j] ^ wb[j]);
  }
  return total;
}

}  // namespace chaoshash
