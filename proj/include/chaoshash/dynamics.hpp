// Copyright (c) 2026 The chaoshash authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chaoshash/bitstring.hpp"
#include "chaoshash/strategy.hpp"

namespace chaoshash {

/// A Boolean map f on n-bit configurations, exposed component-wise: the
/// update of component i evaluates f_i(x) only. Maps whose components
/// depend on their own bit alone may also carry a per-component inverse,
/// which single-step inversion and the post-treatment inverse need.
class BooleanMap {
 public:
  /// f_i(x); the index is 1-based.
  using ComponentFn = std::function<bool(const Configuration&, std::uint32_t)>;
  /// Inverse of the restriction of f_i to its own bit: given f_i value and
  /// i, returns the original bit.
  using InverseFn = std::function<bool(bool, std::uint32_t)>;

  BooleanMap(std::string name, std::size_t n, ComponentFn component);
  BooleanMap(std::string name, std::size_t n, ComponentFn component,
             InverseFn inverse);

  const std::string& name() const noexcept { return name_; }
  std::size_t n() const noexcept { return n_; }

  bool component(const Configuration& x, std::uint32_t index) const;

  bool invertible() const noexcept { return static_cast<bool>(inverse_); }
  bool invert_component(bool value, std::uint32_t index) const;

  /// Full image f(x): every component evaluated against the input.
  Configuration apply(const Configuration& x) const;

 private:
  std::string name_;
  std::size_t n_;
  ComponentFn component_;
  InverseFn inverse_;
};

namespace maps {

/// f_i(x) = not x_i. Self-inverse.
BooleanMap negation(std::size_t n);

/// f_i(x) = x_i. Self-inverse.
BooleanMap identity(std::size_t n);

/// Per-component rotation on {0,1}: f_i(x) = x_i xor mask_i, i.e. the
/// components selected by the mask are negated. Self-inverse.
BooleanMap toggle_rotation(std::size_t n, BitString mask);

/// f_i(x) = 0 for all i; not bijective for n >= 1.
BooleanMap constant_zero(std::size_t n);

/// Full-vector left rotation f_i(x) = x_{i+1 mod n}. Bijective as a map,
/// but its components read other bits, so single-component updates are
/// not permutations; kept as a counterexample for the bijectivity oracle.
BooleanMap rotate_left(std::size_t n);

}  // namespace maps

/// One asynchronous update: component `index` of x replaced by f_index(x),
/// everything else untouched.
Configuration apply_F(const BooleanMap& f, std::uint32_t index,
                      const Configuration& x);

/// A point of the iteration space: a finite strategy with a cursor (the
/// shift map advances the cursor) and the current configuration.
struct SystemPoint {
  Strategy strategy;
  std::size_t cursor = 0;
  Configuration config;

  std::size_t remaining() const noexcept {
    return strategy.size() - cursor;
  }
  std::uint32_t head() const { return strategy.indices.at(cursor); }
};

/// One step of the shift-and-update map: the configuration is updated with
/// the strategy head, the strategy advances by one. Throws DomainError on
/// an exhausted strategy.
SystemPoint step_G(const BooleanMap& f, SystemPoint point);

/// Folds step_G over the whole strategy and returns the final
/// configuration.
Configuration iterate(const BooleanMap& f, const Strategy& strategy,
                      Configuration x0);

/// Specialized iteration for the negation map: each step flips the bit the
/// strategy selects. Equal to iterate(maps::negation(n), ...) and checked
/// against it in the tests.
Configuration iterate_negation(const Strategy& strategy, Configuration x0);

/// Exhaustive single-step bijectivity oracle (n <= 16): maps every
/// configuration through apply_F(f, s, .) and reports whether the image is
/// a permutation, returning the image table indexed by configuration value
/// (component 1 = most significant bit).
struct StepBijectivity {
  bool bijective = false;
  std::vector<std::uint32_t> image;
};
StepBijectivity check_bijective_step(const BooleanMap& f, std::uint32_t s);

/// Exhaustive oracle (n <= 16): whether x -> iterate(f, strategy, x) is a
/// permutation of the whole state space.
bool check_bijective_iteration(const BooleanMap& f, const Strategy& strategy);

/// Helpers for desk-scale enumeration (n <= 32).
Configuration config_from_value(std::uint32_t value, std::size_t n);
std::uint32_t config_value(const Configuration& config);

}  // namespace chaoshash
