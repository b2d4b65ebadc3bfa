#include <algorithm>
#include <vector>

#include "shallow/coloring.hpp"

namespace shallow {
namespace {

// Number of vertices outside `eliminated` + {v} that v reaches through
// eliminated vertices only: the degree of v at the moment it is eliminated.
int elimination_degree(const Graph& g, VertexSet eliminated, int v) {
  VertexSet seen = VertexSet::singleton(v);
  std::vector<int> stack{v};
  VertexSet boundary;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u)) {
      if (seen.contains(w)) continue;
      seen.insert(w);
      if (eliminated.contains(w)) {
        stack.push_back(w);
      } else {
        boundary.insert(w);
      }
    }
  }
  return boundary.size();
}

}  // namespace

int treewidth_exact(const Graph& g, const SearchLimits& limits) {
  limits.require_vertex_cap(g, "treewidth_exact");
  const int n = g.vertex_count();
  if (n == 0) return -1;
  // best[S]: least possible max elimination degree when S is eliminated first.
  const std::size_t states = std::size_t{1} << n;
  std::vector<int> best(states, 0);
  best[0] = -1;
  for (std::size_t bits = 1; bits < states; ++bits) {
    VertexSet set(bits);
    int value = n;
    for (int v : set) {
      VertexSet rest = set;
      rest.erase(v);
      value = std::min(value, std::max(best[rest.bits()], elimination_degree(g, rest, v)));
    }
    best[bits] = value;
  }
  return best[states - 1];
}

}  // namespace shallow
