#pragma once

#include <optional>
#include <vector>

#include "shallow/bramble.hpp"
#include "shallow/coloring.hpp"
#include "shallow/minors.hpp"

namespace shallow {

// Executable versions of the constructive arguments that bound the bramble
// number. Each one checks the property its argument guarantees and throws
// ProofViolation if it does not hold.

struct OrderedHittingSet {
  /// One vertex per element, each reached from `pivot` as described below.
  VertexSet hitting_set;
  /// The latest of the per-element minimum vertices.
  int pivot = -1;
  /// sreach(g, 4r+1, order, pivot), which contains hitting_set.
  VertexSet pivot_reach;
  /// The pivot-to-element path walked for each element.
  std::vector<std::vector<int>> paths;
};

/// For each element B take its earliest vertex v_B; the pivot is the latest of
/// these. Walk a shortest path from the pivot to v_B inside G[B* + B], where B*
/// is the first element whose earliest vertex is the pivot, and keep the first
/// vertex after the pivot that is not later than it (the pivot itself when it
/// lies in B). The result hits every element and is strongly
/// (4r+1)-reachable from the pivot.
OrderedHittingSet hitting_set_from_order(const Graph& g, const Bramble& bramble, const LinearOrder& order, Depth r);

struct CliqueModelTrace {
  MinorModel model;
  /// Union of the branch sets; hits every element.
  VertexSet vertices;
  /// Clique bound used for the branch-set size limits.
  int clique_bound = 0;
  int largest_branch_set = 0;
  /// largest_branch_set <= 1 + 5(r+1)(clique_bound-1)
  bool within_loose_bound = true;
  /// largest_branch_set <= 1 + (5r+1)(clique_bound-1)
  bool within_tight_bound = true;
  int augmentations = 0;
  int deletions = 0;
};

/// Grows a depth-(5r+1) clique model until every element meets it. While
/// some element misses the model: drop a branch set if that leaves the union
/// of missed elements unchanged, otherwise add a new branch set joined to all
/// existing ones through the elements. `clique_bound` defaults to the depth-
/// (5r+1) clique minor number of g.
CliqueModelTrace clique_model_from_bramble(const Graph& g, const Bramble& bramble, Depth r,
                                           std::optional<int> clique_bound = std::nullopt,
                                           const SearchLimits& limits = SearchLimits::from_environment());

/// For every X with |X| < ceil(k/t), k the certified order: take the first
/// element missing X, its canonical center v_X, and the (3r+1)-ball around
/// v_X in G - X. The balls form a depth-(3r+1) t-bramble of order >= ceil(k/t).
Bramble lift_to_t_bramble(const Graph& g, const Bramble& bramble, const OrderCertificate& certificate, Depth r,
                          int t);

}  // namespace shallow
