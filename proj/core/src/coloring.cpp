#include "shallow/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "shallow/errors.hpp"

namespace shallow {
namespace {

// |SReach| of v when `earlier` holds the vertices placed before v and `later`
// the vertices placed after it.
VertexSet reach_set(const Graph& g, VertexSet earlier, int v, VertexSet later, Depth r) {
  VertexSet result = VertexSet::singleton(v);
  VertexSet visited = result;
  VertexSet frontier = result;
  for (std::uint32_t step = 1; r.admits(step) && !frontier.empty(); ++step) {
    VertexSet around = g.neighborhood(frontier);
    result |= around & earlier;
    frontier = (around & later) - visited;
    visited |= frontier;
  }
  return result;
}

// Prefix search: is there an order whose every vertex reaches at most `bound`
// vertices? Tries vertices in increasing index at each position, so the first
// order found is the lexicographically least one.
class OrderSearch {
 public:
  OrderSearch(const Graph& g, Depth r) : g_(g), r_(r), all_(g.all_vertices()) {
    if (g.vertex_count() <= 22) dead_table_.assign(std::size_t{1} << g.vertex_count(), 0);
  }

  bool feasible(int bound, std::vector<int>& order) {
    bound_ = bound;
    order.clear();
    std::fill(dead_table_.begin(), dead_table_.end(), 0);
    dead_set_.clear();
    return extend(VertexSet(), order);
  }

 private:
  bool is_dead(VertexSet placed) const {
    return dead_table_.empty() ? dead_set_.contains(placed.bits()) : dead_table_[placed.bits()] != 0;
  }
  void mark_dead(VertexSet placed) {
    if (dead_table_.empty()) {
      dead_set_.insert(placed.bits());
    } else {
      dead_table_[placed.bits()] = 1;
    }
  }

  bool extend(VertexSet placed, std::vector<int>& order) {
    if (placed == all_) return true;
    for (int v : all_ - placed) {
      VertexSet next = placed;
      next.insert(v);
      if (is_dead(next)) continue;
      if (reach_set(g_, placed, v, all_ - next, r_).size() > bound_) continue;
      order.push_back(v);
      if (extend(next, order)) return true;
      order.pop_back();
    }
    mark_dead(placed);
    return false;
  }

  const Graph& g_;
  Depth r_;
  VertexSet all_;
  int bound_ = 0;
  std::vector<char> dead_table_;
  std::unordered_set<std::uint64_t> dead_set_;
};

ScolResult make_result(const Graph& g, Depth r, std::vector<int> sequence) {
  ScolResult result;
  result.witness_order = LinearOrder(std::move(sequence));
  result.per_vertex_reach.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    result.per_vertex_reach[v] = sreach(g, r, result.witness_order, v).size();
    result.value = std::max(result.value, result.per_vertex_reach[v]);
  }
  return result;
}

void require_masks(const Graph& g, const char* op) {
  if (!g.has_masks()) throw CapExceeded(std::string(op) + ": needs at most 64 vertices");
}

}  // namespace

LinearOrder::LinearOrder(std::vector<int> sequence) : sequence_(std::move(sequence)) {
  const int n = static_cast<int>(sequence_.size());
  position_.assign(n, -1);
  for (int p = 0; p < n; ++p) {
    int v = sequence_[p];
    if (v < 0 || v >= n || position_[v] != -1) throw InvalidArgument("linear order is not a permutation");
    position_[v] = p;
  }
}

LinearOrder LinearOrder::identity(int n) {
  std::vector<int> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  return LinearOrder(std::move(seq));
}

VertexSet sreach(const Graph& g, Depth r, const LinearOrder& order, int v) {
  require_masks(g, "sreach");
  if (order.size() != g.vertex_count()) throw InvalidArgument("order size does not match the graph");
  VertexSet earlier;
  VertexSet later;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (order.before(u, v)) earlier.insert(u);
    if (order.before(v, u)) later.insert(u);
  }
  return reach_set(g, earlier, v, later, r);
}

int scol_given_order(const Graph& g, Depth r, const LinearOrder& order) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, sreach(g, r, order, v).size());
  return best;
}

ScolResult scol_heuristic(const Graph& g, Depth r) {
  require_masks(g, "scol_heuristic");
  r = r.clamped_for(static_cast<std::uint32_t>(g.vertex_count()));
  const int n = g.vertex_count();
  std::vector<int> sequence(n);
  VertexSet remaining = g.all_vertices();
  VertexSet placed_after;
  for (int p = n - 1; p >= 0; --p) {
    int best_v = -1;
    int best_size = 0;
    for (int v : remaining) {
      VertexSet earlier = remaining;
      earlier.erase(v);
      int size = reach_set(g, earlier, v, placed_after, r).size();
      if (best_v < 0 || size < best_size) {
        best_v = v;
        best_size = size;
      }
    }
    sequence[p] = best_v;
    remaining.erase(best_v);
    placed_after.insert(best_v);
  }
  return make_result(g, r, std::move(sequence));
}

ScolResult scol_exact(const Graph& g, Depth r, const SearchLimits& limits) {
  limits.require_exhaustive(g, "scol_exact");
  r = r.clamped_for(static_cast<std::uint32_t>(g.vertex_count()));
  if (g.vertex_count() == 0) return {};
  ScolResult upper = scol_heuristic(g, r);
  OrderSearch search(g, r);
  std::vector<int> order;
  std::vector<int> best_order;
  int bound = upper.value;
  // Tighten until infeasible; the last success is the optimum.
  while (bound > 1 && search.feasible(bound - 1, order)) {
    best_order = order;
    --bound;
  }
  if (best_order.empty()) {
    search.feasible(bound, order);
    best_order = order;
  }
  return make_result(g, r, std::move(best_order));
}

}  // namespace shallow
