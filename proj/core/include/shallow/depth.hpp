#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace shallow {

/// A radius or path-length bound: a natural number or infinity.
class Depth {
 public:
  constexpr Depth() = default;
  constexpr Depth(std::uint32_t value) : value_(value) {}  // NOLINT: implicit from integers is intended

  static constexpr Depth infinity() {
    Depth d;
    d.value_ = kInfinite;
    return d;
  }

  constexpr bool is_infinite() const { return value_ == kInfinite; }
  constexpr bool is_finite() const { return value_ != kInfinite; }

  /// Finite value; throws for infinity.
  std::uint32_t value() const;

  /// mul * r + add, with infinity absorbing.
  constexpr Depth affine(std::uint32_t mul, std::uint32_t add) const {
    if (is_infinite()) return infinity();
    std::uint64_t v = std::uint64_t{mul} * value_ + add;
    if (v >= kInfinite) return infinity();
    return Depth(static_cast<std::uint32_t>(v));
  }

  /// True if a walk of `steps` edges stays within this bound.
  constexpr bool admits(std::uint32_t steps) const { return is_infinite() || steps <= value_; }

  /// Bounds at or beyond n-1 behave like infinity on an n-vertex graph.
  constexpr Depth clamped_for(std::uint32_t vertex_count) const {
    if (is_infinite()) return *this;
    if (vertex_count == 0 || value_ + 1 >= vertex_count) return infinity();
    return *this;
  }

  constexpr auto operator<=>(const Depth&) const = default;

  std::string to_string() const;
  /// Accepts a decimal natural number or "inf".
  static Depth parse(std::string_view text);

 private:
  static constexpr std::uint32_t kInfinite = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t value_ = 0;
};

}  // namespace shallow
