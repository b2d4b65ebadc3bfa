#include "shallow/depth.hpp"

#include <charconv>

#include "shallow/errors.hpp"

namespace shallow {

std::uint32_t Depth::value() const {
  if (is_infinite()) throw InvalidArgument("infinite depth has no finite value");
  return value_;
}

std::string Depth::to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

Depth Depth::parse(std::string_view text) {
  if (text == "inf" || text == "INF" || text == "infinity") return infinity();
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty() || v == kInfinite) {
    throw InputError("invalid depth '" + std::string(text) + "' (expected a natural number or 'inf')");
  }
  return Depth(v);
}

}  // namespace shallow
