#include "shallow/constructions.hpp"

#include <algorithm>
#include <string>

#include "shallow/errors.hpp"
#include "shallow/generators.hpp"
#include "shallow/metric.hpp"

namespace shallow {
namespace {

void check(bool condition, const std::string& what) {
  if (!condition) throw ProofViolation(what);
}

bool within(Depth bound, std::size_t edges) { return bound.admits(static_cast<std::uint32_t>(edges)); }

VertexSet missed_union(const Bramble& bramble, VertexSet model_vertices) {
  VertexSet out;
  for (VertexSet e : bramble.elements)
    if (!e.intersects(model_vertices)) out |= e;
  return out;
}

VertexSet union_of(const std::vector<VertexSet>& sets, std::size_t skip = static_cast<std::size_t>(-1)) {
  VertexSet out;
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (i != skip) out |= sets[i];
  return out;
}

}  // namespace

OrderedHittingSet hitting_set_from_order(const Graph& g, const Bramble& bramble, const LinearOrder& order, Depth r) {
  if (bramble.elements.empty() || !validate_bramble(g, bramble, r)) {
    throw InvalidArgument("hitting_set_from_order: not a valid nonempty depth-r bramble");
  }
  if (order.size() != g.vertex_count()) throw InvalidArgument("order size does not match the graph");
  auto earliest = [&](VertexSet b) {
    int best = b.front();
    for (int v : b)
      if (order.before(v, best)) best = v;
    return best;
  };
  OrderedHittingSet out;
  const VertexSet* pivot_element = nullptr;
  for (const VertexSet& b : bramble.elements) {
    int v = earliest(b);
    if (out.pivot < 0 || order.before(out.pivot, v)) {
      out.pivot = v;
      pivot_element = &b;
    }
  }
  const int pivot = out.pivot;
  const Depth reach_bound = r.affine(4, 1);
  for (const VertexSet& b : bramble.elements) {
    std::vector<int> path;
    int hit = pivot;
    if (b.contains(pivot)) {
      path = {pivot};
    } else {
      auto found = shortest_path_within(g, *pivot_element | b, VertexSet::singleton(pivot),
                                        VertexSet::singleton(earliest(b)));
      check(found.has_value(), "pivot element and element do not touch");
      path = std::move(*found);
      auto it = std::find_if(path.begin() + 1, path.end(), [&](int w) { return !order.before(pivot, w); });
      check(it != path.end(), "path to the earliest vertex has no early vertex");
      hit = *it;
    }
    check(within(reach_bound, path.size() - 1), "pivot path longer than 4r+1");
    check(b.contains(hit), "selected vertex lies outside its element");
    out.hitting_set.insert(hit);
    out.paths.push_back(std::move(path));
  }
  out.pivot_reach = sreach(g, reach_bound, order, pivot);
  check(out.hitting_set.is_subset_of(out.pivot_reach), "hitting set is not strongly reachable from the pivot");
  return out;
}

CliqueModelTrace clique_model_from_bramble(const Graph& g, const Bramble& bramble, Depth r,
                                           std::optional<int> clique_bound, const SearchLimits& limits) {
  if (bramble.elements.empty() || !validate_bramble(g, bramble, r)) {
    throw InvalidArgument("clique_model_from_bramble: not a valid nonempty depth-r bramble");
  }
  const Depth model_depth = r.affine(5, 1);
  CliqueModelTrace trace;
  trace.clique_bound = clique_bound ? *clique_bound : shallow_clique_number(g, model_depth, limits).size;
  const int t = trace.clique_bound;

  std::vector<VertexSet> branches;
  // (|missed union|, |model vertices|) strictly decreases lexicographically
  // every round, so the loop ends after at most n * n rounds.
  const int max_rounds = (g.vertex_count() + 1) * (g.vertex_count() + 1) + 1;
  for (int round = 0;; ++round) {
    check(round < max_rounds, "clique model loop did not terminate");
    const VertexSet model_vertices = union_of(branches);
    const VertexSet missed = missed_union(bramble, model_vertices);
    if (missed.empty()) break;

    bool deleted = false;
    for (std::size_t i = 0; i < branches.size(); ++i) {
      if (missed_union(bramble, union_of(branches, i)).size() <= missed.size()) {
        branches.erase(branches.begin() + static_cast<std::ptrdiff_t>(i));
        ++trace.deletions;
        deleted = true;
        break;
      }
    }
    if (deleted) continue;

    VertexSet grown;
    std::vector<int> anchors;
    for (std::size_t i = 0; i < branches.size(); ++i) {
      const VertexSet others = union_of(branches, i);
      auto owner = std::find_if(bramble.elements.begin(), bramble.elements.end(), [&](VertexSet e) {
        return e.intersects(branches[i]) && !e.intersects(others);
      });
      check(owner != bramble.elements.end(), "no element private to a branch set");
      auto path = shortest_path_within(g, branches[i] | *owner | missed, branches[i], missed);
      check(path.has_value(), "branch set cannot reach the missed elements");
      check(within(r.affine(2, 1), path->size() - 1), "branch-to-missed path longer than 2r+1");
      for (std::size_t k = 1; k < path->size(); ++k) grown.insert((*path)[k]);
      anchors.push_back(path->back());
    }
    const int hub = canonical_center(g, missed);
    check(r.affine(3, 1) >= eccentricity_within(g, missed, hub), "missed union has radius above 3r+1");
    grown.insert(hub);
    for (int x : anchors) {
      auto path = shortest_path_within(g, missed, VertexSet::singleton(hub), VertexSet::singleton(x));
      check(path.has_value(), "missed union is disconnected");
      for (int v : *path) grown.insert(v);
    }

    check(!grown.intersects(model_vertices), "new branch set overlaps the model");
    check(is_connected_subset(g, grown), "new branch set is disconnected");
    check(model_depth >= radius_of_subset(g, grown), "new branch set has radius above 5r+1");
    for (VertexSet b : branches) check(g.neighborhood(grown).intersects(b), "new branch set misses a branch set");
    if (r.is_finite()) {
      const long long s = static_cast<long long>(branches.size());
      check(grown.size() <= 1 + (5LL * r.value() + 1) * s, "new branch set larger than 1+(5r+1)s");
    }
    branches.push_back(grown);
    ++trace.augmentations;
    check(static_cast<int>(branches.size()) <= t, "clique model larger than the clique bound");
  }

  trace.model = MinorModel{branches, model_depth};
  trace.vertices = union_of(branches);
  for (VertexSet b : branches) trace.largest_branch_set = std::max(trace.largest_branch_set, b.size());
  for (VertexSet e : bramble.elements) check(e.intersects(trace.vertices), "model vertices miss an element");
  check(validate_model(g, complete_graph(static_cast<int>(branches.size())), trace.model, model_depth),
        "final model is not a depth-(5r+1) clique model");
  if (r.is_finite()) {
    const long long rv = r.value();
    trace.within_loose_bound = trace.largest_branch_set <= 1 + 5 * (rv + 1) * (t - 1);
    trace.within_tight_bound = trace.largest_branch_set <= 1 + (5 * rv + 1) * (t - 1);
    check(trace.within_loose_bound, "branch set larger than 1+5(r+1)(t-1)");
    check(trace.vertices.size() <= (5 * rv + 1) * t * t, "model larger than (5r+1)t^2");
  }
  return trace;
}

Bramble lift_to_t_bramble(const Graph& g, const Bramble& bramble, const OrderCertificate& certificate, Depth r,
                          int t) {
  if (t < 1) throw InvalidArgument("t must be at least 1");
  if (bramble.elements.empty() || !validate_bramble(g, bramble, r)) {
    throw InvalidArgument("lift_to_t_bramble: not a valid nonempty depth-r bramble");
  }
  if (!verify_order_certificate(g, bramble, certificate)) {
    throw InvalidArgument("lift_to_t_bramble: order certificate does not match the bramble");
  }
  const int k = certificate.order;
  const int needed = (k + t - 1) / t;
  const Depth ball_radius = r.affine(3, 1);
  std::vector<VertexSet> balls;
  for_each_subset_up_to_size(g.all_vertices(), needed - 1, [&](VertexSet x) {
    auto element = std::find_if(bramble.elements.begin(), bramble.elements.end(),
                                [&](VertexSet e) { return !e.intersects(x); });
    check(element != bramble.elements.end(), "deletion set hits every element below the order");
    balls.push_back(ball(g, x, canonical_center(g, *element), ball_radius));
    return true;
  });
  Bramble lifted = Bramble::from_elements(std::move(balls), ball_radius);
  check(is_t_bramble(g, lifted, ball_radius, t), "lifted family is not a depth-(3r+1) t-bramble");
  check(bramble_order(g, lifted).order >= needed, "lifted family has order below ceil(k/t)");
  return lifted;
}

}  // namespace shallow
