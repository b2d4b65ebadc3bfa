#pragma once

#include <optional>
#include <vector>

#include "shallow/depth.hpp"
#include "shallow/graph.hpp"

namespace shallow {

// Distances here are always taken inside an induced subgraph: either G[B] for
// a given set B, or G - removed. Set-valued functions require G.has_masks().

/// Shortest u-v path length in G[within]; infinity if none.
Depth dist_within(const Graph& g, VertexSet within, int u, int v);

/// Eccentricity of `center` in G[within]; infinity if G[within] is disconnected.
Depth eccentricity_within(const Graph& g, VertexSet within, int center);

/// Radius of G[b]: min over centers of the max distance inside b.
/// Infinity iff G[b] is disconnected. Throws on an empty set.
Depth radius_of_subset(const Graph& g, VertexSet b);

/// Least vertex of b attaining the radius of G[b]. Throws on an empty set.
int canonical_center(const Graph& g, VertexSet b);

bool is_connected_subset(const Graph& g, VertexSet b);

/// Shared vertex, or an edge with one endpoint in each.
bool touch(const Graph& g, VertexSet a, VertexSet b);

/// Vertices of G - removed at distance <= r from center. Throws if center is removed.
VertexSet ball(const Graph& g, VertexSet removed, int center, Depth r);

/// Breadth-first distances from `sources` in G[within]; -1 for unreachable.
/// Works for any vertex count.
std::vector<int> bfs_distances(const Graph& g, const std::vector<char>& within, const std::vector<int>& sources);

/// Shortest path from any source to any target in G[within], as a vertex
/// sequence starting at a source. Neighbors are explored in increasing order,
/// so ties resolve to the least vertices.
std::optional<std::vector<int>> shortest_path_within(const Graph& g, VertexSet within, VertexSet sources,
                                                     VertexSet targets);

/// Length of a shortest cycle; infinity for forests. Any vertex count.
Depth girth(const Graph& g);

/// Max over subgraphs of the min degree. Any vertex count.
int degeneracy(const Graph& g);

/// Infinity for disconnected graphs; 0 for the empty graph.
Depth diameter(const Graph& g);

int minimum_degree(const Graph& g);
int clique_number(const Graph& g);

}  // namespace shallow
