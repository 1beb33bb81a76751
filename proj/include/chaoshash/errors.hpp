// Copyright (c) 2026 The chaoshash authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chaoshash {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A character or byte outside the 7-bit range was encountered.
class EncodingError : public Error {
 public:
  EncodingError(std::string message, std::size_t position)
      : Error(std::move(message)), position_(position) {}

  /// 1-based position of the offending character.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Two operands that must have equal length do not.
class LengthMismatchError : public Error {
 public:
  LengthMismatchError(std::string message, std::size_t lhs, std::size_t rhs)
      : Error(std::move(message)), lhs_(lhs), rhs_(rhs) {}

  std::size_t lhs() const noexcept { return lhs_; }
  std::size_t rhs() const noexcept { return rhs_; }

 private:
  std::size_t lhs_;
  std::size_t rhs_;
};

/// A precondition on an argument's domain was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace chaoshash
