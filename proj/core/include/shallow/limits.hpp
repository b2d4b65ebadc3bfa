#pragma once

#include <string_view>

#include "shallow/graph.hpp"

namespace shallow {

/// Size caps for the set-based and exhaustive searches.
///
/// `max_vertices` bounds anything that materializes vertex subsets (default 16,
/// overridable with SHALLOW_MAX_VERTICES, never above 64). The exhaustive
/// parameter searches are additionally refused above `exhaustive_vertices`
/// unless `force` is set, since several of them are doubly exponential.
struct SearchLimits {
  int max_vertices = 16;
  int exhaustive_vertices = 10;
  bool force = false;

  /// Defaults with SHALLOW_MAX_VERTICES applied.
  static SearchLimits from_environment();

  /// Throws CapExceeded if n > max_vertices.
  void require_vertex_cap(const Graph& g, std::string_view operation) const;
  /// Both caps; `force` lifts the exhaustive one only.
  void require_exhaustive(const Graph& g, std::string_view operation) const;
};

}  // namespace shallow
