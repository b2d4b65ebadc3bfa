#include "shallow/limits.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "shallow/errors.hpp"

namespace shallow {

SearchLimits SearchLimits::from_environment() {
  SearchLimits limits;
  if (const char* env = std::getenv("SHALLOW_MAX_VERTICES"); env != nullptr && *env != '\0') {
    int v = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), v);
    if (ec == std::errc() && *ptr == '\0' && v > 0) limits.max_vertices = std::min(v, kMaxSetVertices);
  }
  return limits;
}

void SearchLimits::require_vertex_cap(const Graph& g, std::string_view operation) const {
  const int cap = std::min(max_vertices, kMaxSetVertices);
  if (g.vertex_count() > cap) {
    throw CapExceeded(std::string(operation) + ": " + std::to_string(g.vertex_count()) +
                      " vertices exceeds the vertex cap of " + std::to_string(cap));
  }
}

void SearchLimits::require_exhaustive(const Graph& g, std::string_view operation) const {
  require_vertex_cap(g, operation);
  if (!force && g.vertex_count() > exhaustive_vertices) {
    throw CapExceeded(std::string(operation) + ": exhaustive search refused on " +
                      std::to_string(g.vertex_count()) + " vertices (limit " + std::to_string(exhaustive_vertices) +
                      "; use --force)");
  }
}

}  // namespace shallow
