#include "shallow/metric.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "shallow/errors.hpp"

namespace shallow {
namespace {

void require_masks(const Graph& g) {
  if (!g.has_masks()) throw CapExceeded("set-based metric operations need at most 64 vertices");
}

void require_member(VertexSet b, int v, const char* what) {
  if (v < 0 || v >= kMaxSetVertices || !b.contains(v)) {
    throw InvalidArgument(std::string(what) + " vertex " + std::to_string(v) + " is not in the set");
  }
}

// Layered BFS on bitmasks; returns the number of layers needed to exhaust the
// reachable part of `within` and the reached set.
struct Sweep {
  std::uint32_t layers = 0;
  VertexSet reached;
};

Sweep sweep(const Graph& g, VertexSet within, VertexSet start) {
  Sweep s{0, start};
  VertexSet frontier = start;
  while (true) {
    VertexSet next = g.neighborhood(frontier) & within;
    next -= s.reached;
    if (next.empty()) return s;
    s.reached |= next;
    frontier = next;
    ++s.layers;
  }
}

}  // namespace

Depth dist_within(const Graph& g, VertexSet within, int u, int v) {
  require_masks(g);
  require_member(within, u, "source");
  require_member(within, v, "target");
  VertexSet reached = VertexSet::singleton(u);
  VertexSet frontier = reached;
  for (std::uint32_t d = 0;; ++d) {
    if (reached.contains(v)) return Depth(d);
    VertexSet next = (g.neighborhood(frontier) & within) - reached;
    if (next.empty()) return Depth::infinity();
    reached |= next;
    frontier = next;
  }
}

Depth eccentricity_within(const Graph& g, VertexSet within, int center) {
  require_masks(g);
  require_member(within, center, "center");
  Sweep s = sweep(g, within, VertexSet::singleton(center));
  if (s.reached != within) return Depth::infinity();
  return Depth(s.layers);
}

Depth radius_of_subset(const Graph& g, VertexSet b) {
  if (b.empty()) throw InvalidArgument("radius of an empty set");
  return eccentricity_within(g, b, canonical_center(g, b));
}

int canonical_center(const Graph& g, VertexSet b) {
  if (b.empty()) throw InvalidArgument("center of an empty set");
  require_masks(g);
  int best = b.front();
  Depth best_ecc = Depth::infinity();
  for (int c : b) {
    Depth e = eccentricity_within(g, b, c);
    if (e.is_infinite()) return b.front();  // disconnected: every vertex is equally bad
    if (e < best_ecc) {
      best_ecc = e;
      best = c;
    }
  }
  return best;
}

bool is_connected_subset(const Graph& g, VertexSet b) {
  if (b.empty()) return false;
  require_masks(g);
  return sweep(g, b, VertexSet::singleton(b.front())).reached == b;
}

bool touch(const Graph& g, VertexSet a, VertexSet b) {
  require_masks(g);
  return a.intersects(b) || g.neighborhood(a).intersects(b);
}

VertexSet ball(const Graph& g, VertexSet removed, int center, Depth r) {
  require_masks(g);
  if (center < 0 || center >= g.vertex_count()) throw InvalidArgument("ball center out of range");
  if (removed.contains(center)) throw InvalidArgument("ball center " + std::to_string(center) + " is removed");
  VertexSet within = g.all_vertices() - removed;
  VertexSet reached = VertexSet::singleton(center);
  VertexSet frontier = reached;
  for (std::uint32_t d = 0; r.admits(d + 1); ++d) {
    VertexSet next = (g.neighborhood(frontier) & within) - reached;
    if (next.empty()) break;
    reached |= next;
    frontier = next;
  }
  return reached;
}

std::vector<int> bfs_distances(const Graph& g, const std::vector<char>& within, const std::vector<int>& sources) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<int> queue;
  for (int s : sources) {
    if (within[s] && dist[s] < 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (within[w] && dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<std::vector<int>> shortest_path_within(const Graph& g, VertexSet within, VertexSet sources,
                                                     VertexSet targets) {
  require_masks(g);
  sources &= within;
  targets &= within;
  std::vector<int> parent(g.vertex_count(), -2);
  std::deque<int> queue;
  for (int s : sources) {
    parent[s] = -1;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (targets.contains(u)) {
      std::vector<int> path;
      for (int v = u; v != -1; v = parent[v]) path.push_back(v);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (int w : g.neighbors(u)) {
      if (within.contains(w) && parent[w] == -2) {
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

Depth girth(const Graph& g) {
  // BFS from every vertex; a non-tree edge closes a cycle through the root of
  // length at most dist[u] + dist[w] + 1, and the minimum over roots is exact.
  const int n = g.vertex_count();
  int best = -1;
  std::vector<int> dist(n);
  std::vector<int> parent(n);
  std::vector<int> queue(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    int head = 0;
    int tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      int u = queue[head++];
      if (best >= 0 && 2 * dist[u] + 1 >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (w != parent[u]) {
          int cycle = dist[u] + dist[w] + 1;
          if (best < 0 || cycle < best) best = cycle;
        }
      }
    }
  }
  return best < 0 ? Depth::infinity() : Depth(static_cast<std::uint32_t>(best));
}

int degeneracy(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(n);
  int max_deg = 0;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  std::vector<std::vector<int>> buckets(max_deg + 1);
  for (int v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
  std::vector<char> removed(n, 0);
  int result = 0;
  int low = 0;
  for (int done = 0; done < n; ++done) {
    low = std::max(0, low - 1);
    int v = -1;
    while (v < 0) {
      while (buckets[low].empty()) ++low;
      int cand = buckets[low].back();
      buckets[low].pop_back();
      if (!removed[cand] && deg[cand] == low) v = cand;
    }
    removed[v] = 1;
    result = std::max(result, low);
    for (int w : g.neighbors(v)) {
      if (!removed[w]) {
        --deg[w];
        buckets[deg[w]].push_back(w);
      }
    }
  }
  return result;
}

Depth diameter(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> all(n, 1);
  int best = 0;
  for (int v = 0; v < n; ++v) {
    auto dist = bfs_distances(g, all, {v});
    for (int d : dist) {
      if (d < 0) return Depth::infinity();
      best = std::max(best, d);
    }
  }
  return Depth(static_cast<std::uint32_t>(best));
}

int minimum_degree(const Graph& g) {
  int best = g.vertex_count() == 0 ? 0 : g.degree(0);
  for (int v = 0; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int clique_number(const Graph& g) {
  require_masks(g);
  int best = 0;
  // Bron-Kerbosch with pivoting on bitmasks.
  auto extend = [&](auto&& self, VertexSet clique, VertexSet cand, VertexSet excluded) -> void {
    if (cand.empty() && excluded.empty()) {
      best = std::max(best, clique.size());
      return;
    }
    if (clique.size() + cand.size() <= best) return;
    int pivot = (cand | excluded).front();
    for (int v : cand - g.neighbor_set(pivot)) {
      VertexSet nv = g.neighbor_set(v);
      VertexSet with_v = clique;
      with_v.insert(v);
      self(self, with_v, cand & nv, excluded & nv);
      cand.erase(v);
      excluded.insert(v);
    }
  };
  extend(extend, VertexSet(), g.all_vertices(), VertexSet());
  return best;
}

}  // namespace shallow
