#pragma once

#include <vector>

#include "shallow/depth.hpp"
#include "shallow/graph.hpp"
#include "shallow/limits.hpp"

namespace shallow {

/// Every nonempty B with G[B] connected and radius at most r, each once, in
/// canonical order (size, then lexicographic). Throws CapExceeded above the
/// vertex cap.
std::vector<VertexSet> enumerate_connected_radius_subsets(const Graph& g, Depth r,
                                                          const SearchLimits& limits = SearchLimits::from_environment());

}  // namespace shallow
