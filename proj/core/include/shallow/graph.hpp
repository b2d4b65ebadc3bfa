#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "shallow/vertex_set.hpp"

namespace shallow {

using Edge = std::pair<int, int>;

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Adjacency is available three ways: sorted neighbor lists, an O(1) adjacency
/// test, and (for n <= 64) neighbor bitmasks used by the exhaustive searches.
/// Instances are immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  /// Throws InvalidArgument on loops, out-of-range endpoints, or repeated edges.
  Graph(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return n_ == 0; }

  bool adjacent(int u, int v) const { return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  /// Edges (u, v) with u < v, in lexicographic order.
  const std::vector<Edge>& edges() const { return edges_; }

  /// True if every vertex fits in a VertexSet.
  bool has_masks() const { return n_ <= kMaxSetVertices; }
  /// Requires has_masks().
  VertexSet neighbor_set(int v) const { return masks_[v]; }
  /// Union of the neighborhoods of `s` (may include vertices of s).
  VertexSet neighborhood(VertexSet s) const;
  VertexSet all_vertices() const { return VertexSet::prefix(n_); }

  /// Induced subgraph on `keep`, relabelled 0..|keep|-1 in increasing order.
  Graph induced(VertexSet keep) const;
  /// Same graph without the given edge.
  Graph without_edge(int u, int v) const;
  /// Image of the graph under vertex v -> perm[v].
  Graph relabelled(std::span<const int> perm) const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  void add_edge_unchecked(int u, int v);
  void finalize();

  int n_ = 0;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::uint8_t> matrix_;
  std::vector<VertexSet> masks_;
  std::vector<Edge> edges_;
};

}  // namespace shallow
