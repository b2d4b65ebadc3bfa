#include "shallow/bramble.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "dyn_bitset.hpp"
#include "shallow/errors.hpp"
#include "shallow/metric.hpp"
#include "shallow/subsets.hpp"

namespace shallow {
namespace {

using detail::DynBitset;

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Drops sets that contain another set of the family: hitting the smaller one
// hits the larger.
std::vector<VertexSet> inclusion_minimal(std::span<const VertexSet> family) {
  std::vector<VertexSet> sorted(family.begin(), family.end());
  std::sort(sorted.begin(), sorted.end(), CanonicalLess{});
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<VertexSet> out;
  for (VertexSet s : sorted) {
    bool dominated = std::any_of(out.begin(), out.end(), [&](VertexSet m) { return m.is_subset_of(s); });
    if (!dominated) out.push_back(s);
  }
  return out;
}

class HittingSetSolver {
 public:
  explicit HittingSetSolver(std::vector<VertexSet> sets) : sets_(std::move(sets)) {}

  VertexSet solve() {
    best_ = greedy();
    search(VertexSet(), sets_);
    return best_;
  }

 private:
  VertexSet greedy() const {
    VertexSet chosen;
    std::vector<VertexSet> open = sets_;
    while (!open.empty()) {
      int best_v = -1;
      int best_hits = -1;
      for (int v = 0; v < kMaxSetVertices; ++v) {
        int hits = 0;
        for (VertexSet s : open) hits += s.contains(v) ? 1 : 0;
        if (hits > best_hits) {
          best_hits = hits;
          best_v = v;
        }
      }
      chosen.insert(best_v);
      std::erase_if(open, [&](VertexSet s) { return s.contains(best_v); });
    }
    return chosen;
  }

  // Greedy packing of pairwise disjoint open sets: each needs its own vertex.
  static int packing_bound(const std::vector<VertexSet>& open) {
    VertexSet used;
    int count = 0;
    for (VertexSet s : open) {
      if (!s.intersects(used)) {
        used |= s;
        ++count;
      }
    }
    return count;
  }

  void search(VertexSet chosen, const std::vector<VertexSet>& open) {
    if (open.empty()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + packing_bound(open) >= best_.size()) return;
    VertexSet branch = open.front();
    for (VertexSet s : open)
      if (s.size() < branch.size()) branch = s;
    for (int v : branch) {
      std::vector<VertexSet> rest;
      for (VertexSet s : open)
        if (!s.contains(v)) rest.push_back(s);
      VertexSet next = chosen;
      next.insert(v);
      search(next, rest);
    }
  }

  std::vector<VertexSet> sets_;
  VertexSet best_;
};

// Checks that every subfamily of at most t distinct elements shares a vertex.
bool subfamilies_intersect(std::span<const VertexSet> elements, int t) {
  auto visit = [&](auto&& self, std::size_t start, VertexSet common, int depth) -> bool {
    if (depth == t) return true;
    for (std::size_t i = start; i < elements.size(); ++i) {
      VertexSet next = depth == 0 ? elements[i] : (common & elements[i]);
      if (next.empty()) return false;
      if (!self(self, i + 1, next, depth + 1)) return false;
    }
    return true;
  };
  return visit(visit, 0, VertexSet(), 0);
}

bool triple_linked(const Graph& g, VertexSet a, VertexSet b, VertexSet c) {
  if (!(a & b & c).empty()) return true;
  for (auto [u, v] : g.edges()) {
    VertexSet e{u, v};
    if (a.intersects(e) && b.intersects(e) && c.intersects(e)) return true;
  }
  return false;
}

// Search for a family of candidate sets that no set of k - 1 vertices hits.
// Variables are the (k-1)-sets X; a value for X is a candidate disjoint from
// X. Several X may share one value, so the state is the chosen family itself.
class BrambleSearch {
 public:
  BrambleSearch(const Graph& g, std::vector<VertexSet> candidates, BrambleConstraints constraints)
      : g_(g), candidates_(std::move(candidates)), constraints_(constraints) {
    const std::size_t c = candidates_.size();
    rows_.assign(c, DynBitset(c));
    for (std::size_t i = 0; i < c; ++i) {
      VertexSet outer = g_.neighborhood(candidates_[i]);
      for (std::size_t j = 0; j < c; ++j) {
        bool ok = constraints_.intersecting >= 2 ? candidates_[i].intersects(candidates_[j])
                                                 : (candidates_[i].intersects(candidates_[j]) ||
                                                    outer.intersects(candidates_[j]));
        if (ok) rows_[i].set(j);
      }
    }
  }

  std::optional<std::vector<VertexSet>> find(int k) {
    const int n = g_.vertex_count();
    if (k - 1 > n || candidates_.empty()) return std::nullopt;
    deletions_.clear();
    for_each_subset_of_size(g_.all_vertices(), k - 1, [&](VertexSet x) {
      deletions_.push_back(x);
      return true;
    });
    misses_.assign(deletions_.size(), DynBitset(candidates_.size()));
    for (std::size_t x = 0; x < deletions_.size(); ++x) {
      for (std::size_t i = 0; i < candidates_.size(); ++i)
        if (!candidates_[i].intersects(deletions_[x])) misses_[x].set(i);
    }
    satisfied_.assign(deletions_.size(), 0);
    chosen_.clear();
    chosen_bits_ = DynBitset(candidates_.size());
    seen_.clear();
    intersections_.clear();
    if (!extend(DynBitset::full(candidates_.size()))) return std::nullopt;
    std::vector<VertexSet> family;
    for (int i : chosen_) family.push_back(candidates_[i]);
    return family;
  }

 private:
  // Conditions that depend on more than one chosen element at a time.
  bool compatible(int c) const {
    const VertexSet b = candidates_[c];
    if (constraints_.intersecting >= 3) {
      for (const auto& [common, size] : intersections_)
        if (!common.intersects(b)) return false;
    }
    if (constraints_.tangle) {
      for (std::size_t i = 0; i < chosen_.size(); ++i)
        for (std::size_t j = i + 1; j < chosen_.size(); ++j)
          if (!triple_linked(g_, candidates_[chosen_[i]], candidates_[chosen_[j]], b)) return false;
    }
    return true;
  }

  bool extend(const DynBitset& allowed) {
    // Most constrained unmet deletion set first.
    int pick = -1;
    int pick_count = 0;
    for (std::size_t x = 0; x < deletions_.size(); ++x) {
      if (satisfied_[x]) continue;
      int count = allowed.count_and(misses_[x]);
      if (pick < 0 || count < pick_count) {
        pick = static_cast<int>(x);
        pick_count = count;
        if (count == 0) return false;
      }
    }
    if (pick < 0) return true;
    if (!seen_.insert(chosen_bits_.words()).second) return false;

    std::vector<int> domain;
    allowed.for_each_and(misses_[pick], [&](int c) { domain.push_back(c); });
    for (int c : domain) {
      if (!compatible(c)) continue;
      // Apply.
      std::vector<int> newly;
      for (std::size_t x = 0; x < deletions_.size(); ++x) {
        if (!satisfied_[x] && misses_[x].test(c)) {
          satisfied_[x] = 1;
          newly.push_back(static_cast<int>(x));
        }
      }
      const std::size_t saved_intersections = intersections_.size();
      if (constraints_.intersecting >= 3) {
        const VertexSet b = candidates_[c];
        for (std::size_t i = 0; i < saved_intersections; ++i) {
          auto [common, size] = intersections_[i];
          if (size + 1 <= constraints_.intersecting - 1) intersections_.emplace_back(common & b, size + 1);
        }
        intersections_.emplace_back(b, 1);
      }
      chosen_.push_back(c);
      chosen_bits_.set(c);
      DynBitset next = allowed;
      next &= rows_[c];

      if (extend(next)) return true;

      chosen_bits_ = without(chosen_bits_, c);
      chosen_.pop_back();
      intersections_.resize(saved_intersections);
      for (int x : newly) satisfied_[x] = 0;
    }
    return false;
  }

  static DynBitset without(const DynBitset& b, int c) {
    DynBitset out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b.test(i) && static_cast<int>(i) != c) out.set(i);
    return out;
  }

  const Graph& g_;
  std::vector<VertexSet> candidates_;
  BrambleConstraints constraints_;
  std::vector<DynBitset> rows_;
  std::vector<VertexSet> deletions_;
  std::vector<DynBitset> misses_;
  std::vector<char> satisfied_;
  std::vector<int> chosen_;
  DynBitset chosen_bits_;
  std::set<std::vector<std::uint64_t>> seen_;
  std::vector<std::pair<VertexSet, int>> intersections_;
};

}  // namespace

Bramble Bramble::from_elements(std::vector<VertexSet> elements, Depth depth) {
  std::sort(elements.begin(), elements.end(), CanonicalLess{});
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return {std::move(elements), depth};
}

VertexSet Bramble::support() const {
  VertexSet all;
  for (VertexSet e : elements) all |= e;
  return all;
}

VertexSet minimum_hitting_set(std::span<const VertexSet> family) {
  for (VertexSet s : family)
    if (s.empty()) throw InvalidArgument("cannot hit an empty set");
  return HittingSetSolver(inclusion_minimal(family)).solve();
}

bool validate_bramble(const Graph& g, const Bramble& bramble, Depth r) {
  if (!g.has_masks()) throw CapExceeded("validate_bramble: needs at most 64 vertices");
  for (VertexSet e : bramble.elements)
    if (e.empty()) throw InvalidArgument("bramble element is empty");
  for (std::size_t i = 0; i < bramble.elements.size(); ++i) {
    VertexSet e = bramble.elements[i];
    if (!e.is_subset_of(g.all_vertices()) || !is_connected_subset(g, e)) return false;
    if (r.is_finite() && radius_of_subset(g, e) > r) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (!touch(g, e, bramble.elements[j])) return false;
  }
  return true;
}

bool is_t_bramble(const Graph& g, const Bramble& bramble, Depth r, int t) {
  if (t < 1) throw InvalidArgument("t must be at least 1");
  return validate_bramble(g, bramble, r) && subfamilies_intersect(bramble.elements, t);
}

bool is_tangle(const Graph& g, const Bramble& bramble, Depth r) {
  if (!validate_bramble(g, bramble, r)) throw InvalidArgument("is_tangle: not a valid bramble at this depth");
  // Triples with a repeated element reduce to touching, already checked.
  const auto& e = bramble.elements;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      for (std::size_t k = j + 1; k < e.size(); ++k)
        if (!triple_linked(g, e[i], e[j], e[k])) return false;
  return true;
}

OrderCertificate bramble_order(const Graph& g, const Bramble& bramble) {
  if (!validate_bramble(g, bramble, Depth::infinity())) throw InvalidArgument("bramble_order: invalid bramble");
  OrderCertificate cert;
  if (bramble.elements.empty()) return cert;
  cert.hitting_set = minimum_hitting_set(bramble.elements);
  cert.order = cert.hitting_set.size();
  if (binomial(g.vertex_count(), cert.order - 1) <= kCertificateMissLimit) {
    std::vector<std::pair<VertexSet, int>> misses;
    for_each_subset_of_size(g.all_vertices(), cert.order - 1, [&](VertexSet x) {
      auto it = std::find_if(bramble.elements.begin(), bramble.elements.end(),
                             [&](VertexSet e) { return !e.intersects(x); });
      if (it == bramble.elements.end()) throw ProofViolation("hitting set smaller than the computed minimum");
      misses.emplace_back(x, static_cast<int>(it - bramble.elements.begin()));
      return true;
    });
    cert.misses = std::move(misses);
  }
  return cert;
}

bool verify_order_certificate(const Graph& g, const Bramble& bramble, const OrderCertificate& certificate) {
  const auto& elements = bramble.elements;
  if (elements.empty()) return certificate.order == 0 && certificate.hitting_set.empty();
  if (certificate.order < 1 || certificate.hitting_set.size() != certificate.order) return false;
  if (!certificate.hitting_set.is_subset_of(g.all_vertices())) return false;
  for (VertexSet e : elements)
    if (!e.intersects(certificate.hitting_set)) return false;
  if (!certificate.misses) return minimum_hitting_set(elements).size() == certificate.order;
  const auto& misses = *certificate.misses;
  std::size_t next = 0;
  bool ok = for_each_subset_of_size(g.all_vertices(), certificate.order - 1, [&](VertexSet x) {
    if (next >= misses.size() || misses[next].first != x) return false;
    int idx = misses[next].second;
    ++next;
    return idx >= 0 && idx < static_cast<int>(elements.size()) && !elements[idx].intersects(x);
  });
  return ok && next == misses.size();
}

std::optional<std::vector<VertexSet>> find_bramble_of_order(const Graph& g, Depth r, int k,
                                                            BrambleConstraints constraints,
                                                            const SearchLimits& limits) {
  limits.require_exhaustive(g, "find_bramble_of_order");
  if (constraints.intersecting < 1) throw InvalidArgument("t must be at least 1");
  r = r.clamped_for(static_cast<std::uint32_t>(g.vertex_count()));
  if (k <= 0) return std::vector<VertexSet>{};
  BrambleSearch search(g, enumerate_connected_radius_subsets(g, r, limits), constraints);
  return search.find(k);
}

BrambleNumber max_bramble_order(const Graph& g, Depth r, BrambleConstraints constraints,
                                const SearchLimits& limits) {
  limits.require_exhaustive(g, "max_bramble_order");
  if (constraints.intersecting < 1) throw InvalidArgument("t must be at least 1");
  r = r.clamped_for(static_cast<std::uint32_t>(g.vertex_count()));
  BrambleNumber result;
  result.witness.depth = r;
  if (g.vertex_count() == 0) return result;
  BrambleSearch search(g, enumerate_connected_radius_subsets(g, r, limits), constraints);
  std::vector<VertexSet> family;
  int k = 0;
  while (auto found = search.find(k + 1)) {
    family = std::move(*found);
    ++k;
  }
  // Keep only the elements the certificate needs: for every (k-1)-set, the
  // first element (canonical order) it misses.
  Bramble full = Bramble::from_elements(family, r);
  std::vector<char> used(full.elements.size(), 0);
  for_each_subset_of_size(g.all_vertices(), k - 1, [&](VertexSet x) {
    for (std::size_t i = 0; i < full.elements.size(); ++i) {
      if (!full.elements[i].intersects(x)) {
        used[i] = 1;
        break;
      }
    }
    return true;
  });
  std::vector<VertexSet> kept;
  for (std::size_t i = 0; i < full.elements.size(); ++i)
    if (used[i]) kept.push_back(full.elements[i]);
  result.witness = Bramble::from_elements(std::move(kept), r);
  result.certificate = bramble_order(g, result.witness);
  result.value = k;
  if (result.certificate.order != k) {
    throw ProofViolation("bramble search: witness order " + std::to_string(result.certificate.order) +
                         " differs from the search value " + std::to_string(k));
  }
  return result;
}

}  // namespace shallow
