#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shallow/graph.hpp"

namespace shallow {

struct FamilyParams {
  std::optional<int> n;
  std::optional<int> t;
  std::optional<double> p;
  std::uint64_t seed = 0;
};

/// Named families: complete, path, cycle, grid, petersen, heawood, mcgee,
/// tutte_coxeter, tutte_12_cage, gnp. Throws InvalidArgument on an unknown
/// family or missing/invalid parameters.
Graph generate(std::string_view family, const FamilyParams& params);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
/// t x t grid, vertex (i, j) -> i * t + j.
Graph grid_graph(int t);
Graph petersen_graph();
Graph heawood_graph();
Graph mcgee_graph();
Graph tutte_coxeter_graph();
Graph tutte_12_cage();
/// Erdos-Renyi G(n, p); identical output for identical (n, p, seed).
Graph gnp_graph(int n, double p, std::uint64_t seed);
/// Uniformly paired configuration model, retried until simple. nullopt if no
/// simple pairing is found within `attempts`.
std::optional<Graph> random_regular_graph(int n, int d, std::uint64_t seed, int attempts = 1000);

struct CatalogEntry {
  std::string name;
  Graph graph;
  int regularity;
  int girth;
};

/// The embedded cubic cages and near-cages, by increasing order.
const std::vector<CatalogEntry>& cage_catalog();

/// Canonical relabelling: the lexicographically greatest upper-triangle
/// adjacency string over all vertex permutations. Brute force, n <= 9.
Graph canonical_form(const Graph& g);

/// All pairwise non-isomorphic connected graphs on 1..max_n vertices
/// (max_n <= 6), ordered by vertex count then by canonical graph6.
std::vector<Graph> connected_graphs_up_to(int max_n);

}  // namespace shallow
