#include "shallow/graph.hpp"

#include <algorithm>
#include <string>

#include "shallow/errors.hpp"

namespace shallow {

Graph::Graph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0) throw InvalidArgument("negative vertex count");
  adjacency_.assign(n_, {});
  matrix_.assign(static_cast<std::size_t>(n_) * n_, 0);
  finalize();
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
      throw InvalidArgument("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
    }
    if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) throw InvalidArgument("repeated edge " + std::to_string(u) + "-" + std::to_string(v));
    add_edge_unchecked(u, v);
  }
  finalize();
}

void Graph::add_edge_unchecked(int u, int v) {
  matrix_[static_cast<std::size_t>(u) * n_ + v] = 1;
  matrix_[static_cast<std::size_t>(v) * n_ + u] = 1;
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
}

void Graph::finalize() {
  edges_.clear();
  for (int u = 0; u < n_; ++u) {
    std::sort(adjacency_[u].begin(), adjacency_[u].end());
    for (int v : adjacency_[u]) {
      if (u < v) edges_.emplace_back(u, v);
    }
  }
  masks_.clear();
  if (has_masks()) {
    masks_.resize(n_);
    for (int u = 0; u < n_; ++u) masks_[u] = VertexSet::from_vector(adjacency_[u]);
  }
}

VertexSet Graph::neighborhood(VertexSet s) const {
  VertexSet out;
  for (int v : s) out |= masks_[v];
  return out;
}

Graph Graph::induced(VertexSet keep) const {
  std::vector<int> index(n_, -1);
  int next = 0;
  for (int v : keep) index[v] = next++;
  std::vector<Edge> kept;
  for (auto [u, v] : edges_) {
    if (index[u] >= 0 && index[v] >= 0) kept.emplace_back(index[u], index[v]);
  }
  return {next, kept};
}

Graph Graph::without_edge(int u, int v) const {
  std::vector<Edge> kept;
  for (auto e : edges_) {
    if (e != Edge{std::min(u, v), std::max(u, v)}) kept.push_back(e);
  }
  return {n_, kept};
}

Graph Graph::relabelled(std::span<const int> perm) const {
  std::vector<Edge> mapped;
  mapped.reserve(edges_.size());
  for (auto [u, v] : edges_) mapped.emplace_back(perm[u], perm[v]);
  return {n_, mapped};
}

}  // namespace shallow
