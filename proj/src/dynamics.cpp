// Copyright (c) 2026 The chaoshash authors
// SPDX-License-Identifier: Apache-2.0
#include "chaoshash/dynamics.hpp"

#include <memory>
#include <string>
#include <utility>

#include "chaoshash/errors.hpp"

namespace chaoshash {

BooleanMap::BooleanMap(std::string name, std::size_t n, ComponentFn component)
    : name_(std::move(name)), n_(n), component_(std::move(component)) {
  if (n_ == 0) throw DomainError("a Boolean map needs n >= 1");
}

BooleanMap::BooleanMap(std::string name, std::size_t n, ComponentFn component,
                       InverseFn inverse)
    : BooleanMap(std::move(name), n, std::move(component)) {
  inverse_ = std::move(inverse);
}

bool BooleanMap::component(const Configuration& x, std::uint32_t index) const {
  if (x.n() != n_) {
    throw LengthMismatchError("configuration size does not match the map",
                              x.n(), n_);
  }
  if (index < 1 || index > n_) {
    throw DomainError("component index " + std::to_string(index) +
                      " outside [1, " + std::to_string(n_) + "]");
  }
  return component_(x, index);
}

bool BooleanMap::invert_component(bool value, std::uint32_t index) const {
  if (!inverse_) {
    throw DomainError("map '" + name_ + "' has no component inverse");
  }
  return inverse_(value, index);
}

Configuration BooleanMap::apply(const Configuration& x) const {
  Configuration out = x;
  for (std::uint32_t i = 1; i <= n_; ++i) {
    out.set_component(i, component(x, i));
  }
  return out;
}

namespace maps {

BooleanMap negation(std::size_t n) {
  return BooleanMap(
      "negation", n,
      [](const Configuration& x, std::uint32_t i) { return !x.component(i); },
      [](bool value, std::uint32_t) { return !value; });
}

BooleanMap identity(std::size_t n) {
  return BooleanMap(
      "identity", n,
      [](const Configuration& x, std::uint32_t i) { return x.component(i); },
      [](bool value, std::uint32_t) { return value; });
}

BooleanMap toggle_rotation(std::size_t n, BitString mask) {
  if (mask.size() != n) {
    throw LengthMismatchError("toggle mask size must equal n", mask.size(), n);
  }
  auto shared = std::make_shared<BitString>(std::move(mask));
  return BooleanMap(
      "toggle-rotation", n,
      [shared](const Configuration& x, std::uint32_t i) {
        return x.component(i) != shared->bit(i - 1);
      },
      [shared](bool value, std::uint32_t i) {
        return value != shared->bit(i - 1);
      });
}

BooleanMap constant_zero(std::size_t n) {
  return BooleanMap("constant-zero", n,
                    [](const Configuration&, std::uint32_t) { return false; });
}

BooleanMap rotate_left(std::size_t n) {
  return BooleanMap("rotate-left", n,
                    [n](const Configuration& x, std::uint32_t i) {
                      return x.component(i == n ? 1 : i + 1);
                    });
}

}  // namespace maps

Configuration apply_F(const BooleanMap& f, std::uint32_t index,
                      const Configuration& x) {
  Configuration out = x;
  out.set_component(index, f.component(x, index));
  return out;
}

SystemPoint step_G(const BooleanMap& f, SystemPoint point) {
  if (point.remaining() == 0) {
    throw DomainError("strategy exhausted: no further iteration is defined");
  }
  const std::uint32_t head = point.head();
  point.config = apply_F(f, head, point.config);
  ++point.cursor;
  return point;
}

Configuration iterate(const BooleanMap& f, const Strategy& strategy,
                      Configuration x0) {
  SystemPoint point{strategy, 0, std::move(x0)};
  for (std::size_t i = 0; i < strategy.size(); ++i) {
    point = step_G(f, std::move(point));
  }
  return point.config;
}

Configuration iterate_negation(const Strategy& strategy, Configuration x0) {
  const std::size_t n = x0.n();
  for (const std::uint32_t index : strategy.indices) {
    if (index < 1 || index > n) {
      throw DomainError("strategy index " + std::to_string(index) +
                        " outside [1, " + std::to_string(n) + "]");
    }
    x0.flip_component(index);
  }
  return x0;
}

namespace {

constexpr std::size_t kOracleLimit = 16;

void require_oracle_scale(std::size_t n) {
  if (n > kOracleLimit) {
    throw DomainError("exhaustive oracle is limited to n <= " +
                      std::to_string(kOracleLimit) + ", got " +
                      std::to_string(n));
  }
}

}  // namespace

Configuration config_from_value(std::uint32_t value, std::size_t n) {
  if (n == 0 || n > 32) throw DomainError("value encoding needs 1 <= n <= 32");
  BitString bits = BitString::zeros(n);
  for (std::size_t i = 0; i < n; ++i) {
    bits.set_bit(i, ((value >> (n - 1 - i)) & 1u) != 0);
  }
  return Configuration(std::move(bits));
}

std::uint32_t config_value(const Configuration& config) {
  const std::size_t n = config.n();
  if (n > 32) throw DomainError("value encoding needs n <= 32");
  std::uint32_t value = 0;
  for (std::size_t i = 0; i < n; ++i) {
    value = (value << 1) | (config.bits().bit(i) ? 1u : 0u);
  }
  return value;
}

StepBijectivity check_bijective_step(const BooleanMap& f, std::uint32_t s) {
  require_oracle_scale(f.n());
  const std::uint32_t count = std::uint32_t{1} << f.n();
  StepBijectivity result;
  result.image.resize(count);
  std::vector<bool> seen(count, false);
  result.bijective = true;
  for (std::uint32_t v = 0; v < count; ++v) {
    const std::uint32_t img =
        config_value(apply_F(f, s, config_from_value(v, f.n())));
    result.image[v] = img;
    if (seen[img]) result.bijective = false;
    seen[img] = true;
  }
  return result;
}

bool check_bijective_iteration(const BooleanMap& f, const Strategy& strategy) {
  require_oracle_scale(f.n());
  const std::uint32_t count = std::uint32_t{1} << f.n();
  std::vector<bool> seen(count, false);
  for (std::uint32_t v = 0; v < count; ++v) {
    const std::uint32_t img =
        config_value(iterate(f, strategy, config_from_value(v, f.n())));
    if (seen[img]) return false;
    seen[img] = true;
  }
  return true;
}

}  // namespace chaoshash
