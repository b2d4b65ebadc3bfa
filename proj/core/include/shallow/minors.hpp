#pragma once

#include <optional>
#include <vector>

#include "shallow/depth.hpp"
#include "shallow/graph.hpp"
#include "shallow/limits.hpp"
#include "shallow/rational.hpp"

namespace shallow {

/// branch_sets[v] is the host vertex set contracted onto pattern vertex v.
struct MinorModel {
  std::vector<VertexSet> branch_sets;
  Depth depth;

  /// Union of the branch sets.
  VertexSet vertices() const;
};

/// Pairwise disjoint connected branch sets of radius <= r, with a host edge
/// between the branch sets of every pattern edge. Throws InvalidArgument if the
/// model does not have exactly one branch set per pattern vertex.
bool validate_model(const Graph& host, const Graph& pattern, const MinorModel& model, Depth r);

/// A depth-r minor model of `pattern` in `host`, if one exists. Deterministic.
std::optional<MinorModel> find_shallow_minor(const Graph& host, const Graph& pattern, Depth r,
                                             const SearchLimits& limits = SearchLimits::from_environment());

struct CliqueMinor {
  int size = 0;
  MinorModel model;
};

/// Largest clique that is a depth-r minor, with its model.
CliqueMinor shallow_clique_number(const Graph& g, Depth r,
                                  const SearchLimits& limits = SearchLimits::from_environment());

struct DensityMinor {
  Rational density;
  /// Branch sets of a densest depth-r minor; its edges are all adjacent pairs.
  std::vector<VertexSet> branch_sets;
  int edges = 0;
};

/// Greatest edge density |E(H)| / |V(H)| over depth-r minors H.
DensityMinor shallow_density(const Graph& g, Depth r, const SearchLimits& limits = SearchLimits::from_environment());

/// Number of pairs of branch sets joined by a host edge.
int contracted_edge_count(const Graph& g, const std::vector<VertexSet>& branch_sets);

struct GridMinor {
  int side = 0;
  MinorModel model;
};

/// Largest t such that the t x t grid is a depth-r minor (1 for any nonempty graph).
GridMinor shallow_grid_number(const Graph& g, Depth r, const SearchLimits& limits = SearchLimits::from_environment());

}  // namespace shallow
