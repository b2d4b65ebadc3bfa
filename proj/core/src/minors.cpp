#include "shallow/minors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "shallow/errors.hpp"
#include "shallow/generators.hpp"
#include "shallow/metric.hpp"
#include "shallow/subsets.hpp"

namespace shallow {
namespace {

bool is_complete(const Graph& g) {
  const long long n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

class MinorSearch {
 public:
  MinorSearch(const Graph& host, const Graph& pattern, std::vector<VertexSet> candidates)
      : host_(host), pattern_(pattern), candidates_(std::move(candidates)), symmetric_(is_complete(pattern)) {
    for (VertexSet c : candidates_) outer_.push_back(host_.neighborhood(c) - c);
    order_.resize(pattern_.vertex_count());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return pattern_.degree(a) > pattern_.degree(b); });
    chosen_.assign(pattern_.vertex_count(), -1);
  }

  std::optional<MinorModel> run(Depth depth) {
    if (pattern_.vertex_count() > host_.vertex_count()) return std::nullopt;
    if (!extend(0, VertexSet())) return std::nullopt;
    MinorModel model{{}, depth};
    for (int c : chosen_) model.branch_sets.push_back(candidates_[c]);
    return model;
  }

 private:
  bool extend(int pos, VertexSet used) {
    const int k = pattern_.vertex_count();
    if (pos == k) return true;
    if (host_.vertex_count() - used.size() < k - pos) return false;
    const int p = order_[pos];
    // Branch sets of a clique are interchangeable: take them in increasing index.
    const int start = (symmetric_ && pos > 0) ? chosen_[order_[pos - 1]] + 1 : 0;
    for (int c = start; c < static_cast<int>(candidates_.size()); ++c) {
      const VertexSet b = candidates_[c];
      if (b.intersects(used)) continue;
      bool joined = true;
      for (int q : pattern_.neighbors(p)) {
        if (chosen_[q] >= 0 && !outer_[c].intersects(candidates_[chosen_[q]])) {
          joined = false;
          break;
        }
      }
      if (!joined) continue;
      chosen_[p] = c;
      if (extend(pos + 1, used | b)) return true;
      chosen_[p] = -1;
    }
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::vector<VertexSet> candidates_;
  std::vector<VertexSet> outer_;
  bool symmetric_;
  std::vector<int> order_;
  std::vector<int> chosen_;
};

}  // namespace

VertexSet MinorModel::vertices() const {
  VertexSet all;
  for (VertexSet b : branch_sets) all |= b;
  return all;
}

bool validate_model(const Graph& host, const Graph& pattern, const MinorModel& model, Depth r) {
  if (static_cast<int>(model.branch_sets.size()) != pattern.vertex_count()) {
    throw InvalidArgument("minor model has " + std::to_string(model.branch_sets.size()) +
                          " branch sets for a pattern on " + std::to_string(pattern.vertex_count()) + " vertices");
  }
  if (!host.has_masks()) throw CapExceeded("validate_model: needs at most 64 host vertices");
  VertexSet used;
  for (VertexSet b : model.branch_sets) {
    if (b.empty() || !b.is_subset_of(host.all_vertices())) return false;
    if (b.intersects(used)) return false;
    used |= b;
    if (!is_connected_subset(host, b)) return false;
    if (r.is_finite() && radius_of_subset(host, b) > r) return false;
  }
  for (auto [u, v] : pattern.edges()) {
    if (!host.neighborhood(model.branch_sets[u]).intersects(model.branch_sets[v])) return false;
  }
  return true;
}

std::optional<MinorModel> find_shallow_minor(const Graph& host, const Graph& pattern, Depth r,
                                             const SearchLimits& limits) {
  limits.require_exhaustive(host, "find_shallow_minor");
  r = r.clamped_for(static_cast<std::uint32_t>(host.vertex_count()));
  // Subgraph embeddings first: they are depth-r models for every r.
  auto found = MinorSearch(host, pattern, enumerate_connected_radius_subsets(host, Depth(0), limits)).run(r);
  if (found || r == Depth(0)) return found;
  return MinorSearch(host, pattern, enumerate_connected_radius_subsets(host, r, limits)).run(r);
}

CliqueMinor shallow_clique_number(const Graph& g, Depth r, const SearchLimits& limits) {
  limits.require_exhaustive(g, "shallow_clique_number");
  r = r.clamped_for(static_cast<std::uint32_t>(g.vertex_count()));
  CliqueMinor best;
  best.model.depth = r;
  const auto singles = enumerate_connected_radius_subsets(g, Depth(0), limits);
  const auto sets = enumerate_connected_radius_subsets(g, r, limits);
  for (int k = 1; k <= g.vertex_count(); ++k) {
    Graph pattern = complete_graph(k);
    auto model = MinorSearch(g, pattern, singles).run(r);
    if (!model && r != Depth(0)) model = MinorSearch(g, pattern, sets).run(r);
    if (!model) break;
    best = {k, *model};
  }
  return best;
}

int contracted_edge_count(const Graph& g, const std::vector<VertexSet>& branch_sets) {
  int count = 0;
  for (std::size_t i = 0; i < branch_sets.size(); ++i) {
    VertexSet outer = g.neighborhood(branch_sets[i]);
    for (std::size_t j = i + 1; j < branch_sets.size(); ++j) count += outer.intersects(branch_sets[j]) ? 1 : 0;
  }
  return count;
}

DensityMinor shallow_density(const Graph& g, Depth r, const SearchLimits& limits) {
  limits.require_exhaustive(g, "shallow_density");
  r = r.clamped_for(static_cast<std::uint32_t>(g.vertex_count()));
  const auto sets = enumerate_connected_radius_subsets(g, r, limits);
  std::vector<VertexSet> outer;
  for (VertexSet s : sets) outer.push_back(g.neighborhood(s) - s);

  DensityMinor best;
  std::vector<int> family;
  // Disjoint families in increasing candidate index; each family is one minor
  // (keeping every available edge maximizes the density).
  auto visit = [&](auto&& self, int start, VertexSet used, int edges) -> void {
    for (int c = start; c < static_cast<int>(sets.size()); ++c) {
      if (sets[c].intersects(used)) continue;
      int added = 0;
      for (int f : family) added += outer[c].intersects(sets[f]) ? 1 : 0;
      family.push_back(c);
      Rational density(edges + added, static_cast<std::int64_t>(family.size()));
      if (best.branch_sets.empty() || density > best.density) {
        best.density = density;
        best.edges = edges + added;
        best.branch_sets.clear();
        for (int f : family) best.branch_sets.push_back(sets[f]);
      }
      self(self, c + 1, used | sets[c], edges + added);
      family.pop_back();
    }
  };
  visit(visit, 0, VertexSet(), 0);
  return best;
}

GridMinor shallow_grid_number(const Graph& g, Depth r, const SearchLimits& limits) {
  limits.require_exhaustive(g, "shallow_grid_number");
  r = r.clamped_for(static_cast<std::uint32_t>(g.vertex_count()));
  GridMinor best;
  best.model.depth = r;
  if (g.vertex_count() == 0) return best;
  best.side = 1;
  best.model.branch_sets = {VertexSet::singleton(0)};
  for (int t = 2; t * t <= g.vertex_count(); ++t) {
    auto model = find_shallow_minor(g, grid_graph(t), r, limits);
    if (!model) break;
    best = {t, *model};
  }
  return best;
}

}  // namespace shallow
