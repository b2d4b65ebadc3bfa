#include "shallow/linkedness.hpp"

#include <algorithm>
#include <string>

#include "shallow/errors.hpp"
#include "shallow/metric.hpp"
#include "shallow/subsets.hpp"

namespace shallow {
namespace {

bool majority(VertexSet candidate, VertexSet s) { return 2 * (candidate & s).size() > s.size(); }

// Vertices of `allowed` within r steps of `sources` in G[allowed].
VertexSet reach_within(const Graph& g, VertexSet allowed, VertexSet sources, Depth r) {
  VertexSet seen = sources & allowed;
  VertexSet frontier = seen;
  for (std::uint32_t step = 0; !frontier.empty() && r.admits(step + 1); ++step) {
    frontier = g.neighborhood(frontier) & allowed;
    frontier -= seen;
    seen |= frontier;
  }
  return seen;
}

std::optional<VertexSet> majority_ball(const Graph& g, VertexSet s, VertexSet removed, Depth r) {
  for (int c : g.all_vertices() - removed) {
    VertexSet b = ball(g, removed, c, r);
    if (majority(b, s)) return b;
  }
  return std::nullopt;
}

void require_set(const Graph& g, VertexSet s, const char* what) {
  if (!g.has_masks()) throw CapExceeded(std::string(what) + ": needs at most 64 vertices");
  if (s.empty()) throw InvalidArgument(std::string(what) + ": S must be nonempty");
  if (!s.is_subset_of(g.all_vertices())) throw InvalidArgument(std::string(what) + ": S has vertices outside the graph");
}

// Adversary for |Y| = j - 1: some A' of S - Y whose far side in G - Y is large enough.
bool well_linked_fails_for(const Graph& g, VertexSet s, VertexSet y, int j, Depth r, PairMode mode) {
  const VertexSet alive = g.all_vertices() - y;
  const VertexSet rest = s - y;
  const int shared = (s & y).size();
  const int smallest = mode == PairMode::overlapping ? j - shared : 1;
  const int largest = mode == PairMode::overlapping ? j - shared : std::min(j, rest.size());
  for (int a = std::max(1, smallest); a <= largest; ++a) {
    bool found = !for_each_subset_of_size(rest, a, [&](VertexSet side) {
      const int far = (rest - reach_within(g, alive, side, r)).size();
      if (mode == PairMode::overlapping) return far < a;
      const int b = std::min(j, far);
      return !(b >= 1 && 2 * j - a - b <= shared);
    });
    if (found) return true;
  }
  return false;
}

}  // namespace

std::optional<LinkedWitness> is_k_linked(const Graph& g, VertexSet s, int k, Depth r) {
  require_set(g, s, "is_k_linked");
  if (k < 1) throw InvalidArgument("is_k_linked: k must be at least 1");
  LinkedWitness w{s, k, r, {}, false};
  bool ok = for_each_subset_up_to_size(g.all_vertices(), k - 1, [&](VertexSet x) {
    auto b = majority_ball(g, s, x, r);
    if (!b) return false;
    w.balls.emplace_back(x, *b);
    return true;
  });
  if (!ok || k - 1 > g.vertex_count()) return std::nullopt;
  return w;
}

namespace {

int tau_of_good(std::span<const VertexSet> candidates, VertexSet s) {
  std::vector<VertexSet> good;
  for (VertexSet c : candidates)
    if (majority(c, s)) good.push_back(c);
  return good.empty() ? 0 : minimum_hitting_set(good).size();
}

}  // namespace

int linkedness_of(const Graph& g, VertexSet s, Depth r, const SearchLimits& limits) {
  require_set(g, s, "linkedness_of");
  auto candidates = enumerate_connected_radius_subsets(g, r, limits);
  return tau_of_good(candidates, s);
}

Linkedness linkedness(const Graph& g, Depth r, const SearchLimits& limits) {
  limits.require_exhaustive(g, "link");
  Linkedness best;
  best.witness.depth = r;
  if (g.empty()) return best;
  auto candidates = enumerate_connected_radius_subsets(g, r, limits);
  VertexSet best_set;
  for (int size = g.vertex_count(); size >= 1; --size) {
    // Deleting ceil(|S|/2) vertices of S leaves no majority anywhere.
    if ((size + 1) / 2 <= best.value) break;
    for_each_subset_of_size(g.all_vertices(), size, [&](VertexSet s) {
      int tau = tau_of_good(candidates, s);
      if (tau > best.value) {
        best.value = tau;
        best_set = s;
      }
      return (size + 1) / 2 > best.value;
    });
  }
  auto w = is_k_linked(g, best_set, best.value, r);
  if (!w) throw ProofViolation("linkedness: hitting-set value not confirmed by balls");
  best.witness = std::move(*w);
  return best;
}

std::optional<std::vector<int>> well_linked_path(const Graph& g, VertexSet a, VertexSet b, VertexSet y, Depth r) {
  auto path = shortest_path_within(g, g.all_vertices() - y, a - y, b - y);
  if (!path || !r.admits(static_cast<std::uint32_t>(path->size() - 1))) return std::nullopt;
  return path;
}

bool is_well_linked(const Graph& g, VertexSet s, Depth r, PairMode mode) {
  require_set(g, s, "is_well_linked");
  for (int j = 1; j <= s.size(); ++j) {
    // Larger Y only helps the adversary, so |Y| = j - 1 suffices.
    bool ok = for_each_subset_of_size(g.all_vertices(), j - 1, [&](VertexSet y) {
      return !well_linked_fails_for(g, s, y, j, r, mode);
    });
    if (!ok) return false;
  }
  return true;
}

bool is_well_linked_by_enumeration(const Graph& g, VertexSet s, Depth r, PairMode mode) {
  require_set(g, s, "is_well_linked_by_enumeration");
  for (int j = 1; j <= s.size(); ++j) {
    bool ok = for_each_subset_of_size(s, j, [&](VertexSet a) {
      return for_each_subset_of_size(s, j, [&](VertexSet b) {
        if (mode == PairMode::disjoint && a.intersects(b)) return true;
        return for_each_subset_up_to_size(g.all_vertices(), j - 1,
                                          [&](VertexSet y) { return well_linked_path(g, a, b, y, r).has_value(); });
      });
    });
    if (!ok) return false;
  }
  return true;
}

WellLinkedness well_linkedness(const Graph& g, Depth r, PairMode mode, const SearchLimits& limits) {
  limits.require_exhaustive(g, "well");
  WellLinkedness best;
  best.witness.depth = r;
  best.witness.disjoint = mode == PairMode::disjoint;
  for (int size = g.vertex_count(); size >= 1 && best.value == 0; --size) {
    for_each_subset_of_size(g.all_vertices(), size, [&](VertexSet s) {
      if (!is_well_linked(g, s, r, mode)) return true;
      best.value = size;
      best.witness.set = s;
      return false;
    });
  }
  return best;
}

LinkedWitness hitting_set_is_linked(const Graph& g, const Bramble& bramble, Depth r) {
  if (bramble.elements.empty() || !validate_bramble(g, bramble, r)) {
    throw InvalidArgument("hitting_set_is_linked: not a valid nonempty depth-r bramble");
  }
  const VertexSet s = bramble_order(g, bramble).hitting_set;
  const int k = (s.size() + 1) / 2;
  const Depth depth = r.affine(3, 1);
  LinkedWitness w{s, k, depth, {}, false};
  for_each_subset_up_to_size(g.all_vertices(), k - 1, [&](VertexSet y) {
    auto element = std::find_if(bramble.elements.begin(), bramble.elements.end(),
                                [&](VertexSet e) { return !e.intersects(y); });
    if (element == bramble.elements.end()) throw ProofViolation("deletion set below the order hits every element");
    VertexSet b = ball(g, y, canonical_center(g, *element), depth);
    if (!majority(b, s)) throw ProofViolation("ball around an element center misses half of the hitting set");
    w.balls.emplace_back(y, b);
    return true;
  });
  return w;
}

WellLinkedWitness hitting_set_is_well_linked(const Graph& g, const Bramble& bramble, Depth r) {
  if (bramble.elements.empty() || !validate_bramble(g, bramble, r)) {
    throw InvalidArgument("hitting_set_is_well_linked: not a valid nonempty depth-r bramble");
  }
  const VertexSet s = bramble_order(g, bramble).hitting_set;
  const Depth depth = r.affine(4, 1);
  if (!is_well_linked(g, s, depth)) throw ProofViolation("minimum hitting set is not well-linked at 4r+1");
  return {s, depth, false};
}

LinkedWitness well_linked_is_linked(const Graph& g, VertexSet s, Depth r) {
  if (!is_well_linked(g, s, r)) throw InvalidArgument("well_linked_is_linked: S is not well-linked");
  int k = 0;
  while (4 * (k + 1) * (k + 1) <= s.size()) ++k;
  const Depth depth = r.affine(3, 0);
  if (k == 0) return {s, 0, depth, {}, true};
  auto w = is_k_linked(g, s, k, depth);
  if (!w) throw ProofViolation("well-linked set is not linked at 3r");
  return *w;
}

Bramble bramble_from_linked_set(const Graph& g, VertexSet s, int k, Depth r) {
  auto w = is_k_linked(g, s, k, r);
  if (!w) throw InvalidArgument("bramble_from_linked_set: S is not k-linked");
  std::vector<VertexSet> elements;
  for (const auto& entry : w->balls) elements.push_back(entry.second);
  Bramble out = Bramble::from_elements(std::move(elements), r);
  if (!validate_bramble(g, out, r)) throw ProofViolation("majority balls do not form a bramble");
  if (bramble_order(g, out).order < k) throw ProofViolation("majority-ball bramble has order below k");
  return out;
}

bool verify_linked(const Graph& g, const LinkedWitness& w) {
  if (!g.has_masks() || !w.set.is_subset_of(g.all_vertices())) return false;
  if (w.vacuous) return w.k == 0 && w.balls.empty();
  if (w.set.empty() || w.k < 1 || w.k - 1 > g.vertex_count()) return false;
  std::size_t next = 0;
  bool ok = for_each_subset_up_to_size(g.all_vertices(), w.k - 1, [&](VertexSet x) {
    if (next >= w.balls.size() || w.balls[next].first != x) return false;
    VertexSet b = w.balls[next++].second;
    if (b.empty() || !b.is_subset_of(g.all_vertices()) || b.intersects(x)) return false;
    if (!is_connected_subset(g, b) || radius_of_subset(g, b) > w.depth) return false;
    return majority(b, w.set);
  });
  return ok && next == w.balls.size();
}

bool verify_well_linked(const Graph& g, const WellLinkedWitness& w) {
  if (!g.has_masks() || w.set.empty() || !w.set.is_subset_of(g.all_vertices())) return false;
  const PairMode mode = w.disjoint ? PairMode::disjoint : PairMode::overlapping;
  if (w.set.size() <= 7 && g.vertex_count() <= 12) return is_well_linked_by_enumeration(g, w.set, w.depth, mode);
  return is_well_linked(g, w.set, w.depth, mode);
}

}  // namespace shallow
