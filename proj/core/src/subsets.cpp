#include "shallow/subsets.hpp"

#include <algorithm>

#include "shallow/metric.hpp"

namespace shallow {

std::vector<VertexSet> enumerate_connected_radius_subsets(const Graph& g, Depth r, const SearchLimits& limits) {
  limits.require_vertex_cap(g, "enumerate_connected_radius_subsets");
  const int n = g.vertex_count();
  r = r.clamped_for(static_cast<std::uint32_t>(n));
  std::vector<VertexSet> out;
  const std::uint64_t end = n == 0 ? 0 : (std::uint64_t{1} << n);
  for (std::uint64_t bits = 1; bits < end; ++bits) {
    VertexSet b(bits);
    if (!is_connected_subset(g, b)) continue;
    if (r.is_finite() && radius_of_subset(g, b) > r) continue;
    out.push_back(b);
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

}  // namespace shallow
