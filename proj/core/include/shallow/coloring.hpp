#pragma once

#include <span>
#include <vector>

#include "shallow/depth.hpp"
#include "shallow/graph.hpp"
#include "shallow/limits.hpp"

namespace shallow {

/// A bijection between vertices and positions 0..n-1.
class LinearOrder {
 public:
  LinearOrder() = default;
  /// sequence[p] is the vertex at position p. Throws unless it is a permutation.
  explicit LinearOrder(std::vector<int> sequence);
  static LinearOrder identity(int n);

  int size() const { return static_cast<int>(sequence_.size()); }
  int position(int v) const { return position_[v]; }
  int at(int p) const { return sequence_[p]; }
  const std::vector<int>& sequence() const { return sequence_; }
  bool before(int u, int v) const { return position_[u] < position_[v]; }

  bool operator==(const LinearOrder&) const = default;

 private:
  std::vector<int> sequence_;
  std::vector<int> position_;
};

/// Vertices u with pos(u) <= pos(v) joined to v by a path of at most r edges
/// whose internal vertices all come strictly after v. Contains v.
VertexSet sreach(const Graph& g, Depth r, const LinearOrder& order, int v);

/// max over v of |sreach(g, r, order, v)|.
int scol_given_order(const Graph& g, Depth r, const LinearOrder& order);

struct ScolResult {
  int value = 0;
  LinearOrder witness_order;
  /// |SReach| of each vertex under witness_order.
  std::vector<int> per_vertex_reach;
};

/// Exact strong r-coloring number with the lexicographically least optimal
/// order. Exhaustive; refused above the exhaustive cap.
ScolResult scol_exact(const Graph& g, Depth r, const SearchLimits& limits = SearchLimits::from_environment());

/// Upper bound from a greedy order built back to front, always placing last
/// the remaining vertex with the smallest reach (ties by index).
ScolResult scol_heuristic(const Graph& g, Depth r);

/// Exact treewidth by dynamic programming over elimination prefixes. Shares
/// no code with the ordering search above.
int treewidth_exact(const Graph& g, const SearchLimits& limits = SearchLimits::from_environment());

}  // namespace shallow
