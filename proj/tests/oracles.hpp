#pragma once

// Brute-force reference implementations used to check the library. They use
// only Graph::adjacent and plain bitmask arithmetic, never the library's
// metric, search or verification code.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "shallow/graph.hpp"

namespace oracle {

using Mask = std::uint64_t;
constexpr int kInf = 1 << 20;

inline bool has(Mask m, int v) { return (m >> v) & 1U; }
inline int popcount(Mask m) { return std::popcount(m); }

inline std::vector<int> members(Mask m) {
  std::vector<int> out;
  for (int v = 0; v < 64; ++v)
    if (has(m, v)) out.push_back(v);
  return out;
}

// All-pairs distances in G[within] by Floyd-Warshall.
inline std::vector<std::vector<int>> distances(const shallow::Graph& g, Mask within) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int u = 0; u < n; ++u) {
    if (!has(within, u)) continue;
    d[u][u] = 0;
    for (int v = 0; v < n; ++v)
      if (has(within, v) && u != v && g.adjacent(u, v)) d[u][v] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

// Radius of G[b]; kInf when disconnected or empty.
inline int radius(const shallow::Graph& g, Mask b) {
  if (b == 0) return kInf;
  auto d = distances(g, b);
  int best = kInf;
  for (int c : members(b)) {
    int ecc = 0;
    for (int v : members(b)) ecc = std::max(ecc, d[c][v]);
    best = std::min(best, ecc);
  }
  return best;
}

inline bool connected(const shallow::Graph& g, Mask b) { return b != 0 && radius(g, b) < kInf; }

inline bool touches(const shallow::Graph& g, Mask a, Mask b) {
  if (a & b) return true;
  for (int u : members(a))
    for (int v : members(b))
      if (g.adjacent(u, v)) return true;
  return false;
}

// Connected sets of radius <= r (r < 0 means unbounded), by mask value.
inline std::vector<Mask> candidates(const shallow::Graph& g, int r) {
  std::vector<Mask> out;
  const Mask total = Mask{1} << g.vertex_count();
  for (Mask b = 1; b < total; ++b) {
    int rad = radius(g, b);
    if (rad < kInf && (r < 0 || rad <= r)) out.push_back(b);
  }
  return out;
}

// Smallest number of vertices meeting every set (subset enumeration).
inline int min_hitting_set(const shallow::Graph& g, const std::vector<Mask>& family) {
  const int n = g.vertex_count();
  int best = n + 1;
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    if (popcount(x) >= best) continue;
    bool hits = std::all_of(family.begin(), family.end(), [&](Mask e) { return (e & x) != 0; });
    if (hits) best = popcount(x);
  }
  return family.empty() ? 0 : best;
}

// Vertices u with pos(u) <= pos(v) at the end of a path of <= r edges from v
// whose inner vertices all sit after v. Simple paths by depth-first search.
inline Mask sreach(const shallow::Graph& g, int r, const std::vector<int>& position, int v) {
  const int n = g.vertex_count();
  Mask out = Mask{1} << v;
  std::function<void(int, int, Mask)> walk = [&](int at, int len, Mask used) {
    if (len == r) return;
    for (int w = 0; w < n; ++w) {
      if (!g.adjacent(at, w) || has(used, w)) continue;
      if (position[w] <= position[v]) {
        out |= Mask{1} << w;
      } else {
        walk(w, len + 1, used | (Mask{1} << w));
      }
    }
  };
  walk(v, 0, Mask{1} << v);
  return out;
}

inline int scol_given(const shallow::Graph& g, int r, const std::vector<int>& sequence) {
  std::vector<int> position(sequence.size());
  for (std::size_t i = 0; i < sequence.size(); ++i) position[sequence[i]] = static_cast<int>(i);
  int worst = 0;
  for (int v = 0; v < g.vertex_count(); ++v) worst = std::max(worst, popcount(sreach(g, r, position, v)));
  return worst;
}

// Minimum over all permutations. r < 0 means unbounded (n - 1 suffices).
inline int scol(const shallow::Graph& g, int r) {
  const int n = g.vertex_count();
  if (r < 0) r = std::max(0, n - 1);
  std::vector<int> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  int best = n;
  do best = std::min(best, scol_given(g, r, seq));
  while (std::next_permutation(seq.begin(), seq.end()));
  return n == 0 ? 0 : best;
}

// Treewidth as the best elimination ordering over all permutations, with fill-in.
inline int treewidth(const shallow::Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return -1;
  std::vector<int> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  int best = n;
  do {
    std::vector<Mask> adj(n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (g.adjacent(u, v)) adj[u] |= Mask{1} << v;
    Mask gone = 0;
    int width = 0;
    for (int v : seq) {
      Mask nb = adj[v] & ~gone;
      width = std::max(width, popcount(nb));
      for (int u : members(nb)) adj[u] |= nb & ~(Mask{1} << u);
      gone |= Mask{1} << v;
    }
    best = std::min(best, width);
  } while (std::next_permutation(seq.begin(), seq.end()));
  return best;
}

inline int clique_number(const shallow::Graph& g) {
  const int n = g.vertex_count();
  int best = 0;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    auto vs = members(s);
    bool clique = true;
    for (std::size_t i = 0; i < vs.size() && clique; ++i)
      for (std::size_t j = i + 1; j < vs.size() && clique; ++j) clique = g.adjacent(vs[i], vs[j]);
    if (clique) best = std::max(best, popcount(s));
  }
  return best;
}

// Every t sets (with repetition) share a vertex: checks all multisets of size t.
inline bool t_intersecting(const std::vector<Mask>& family, int t) {
  std::function<bool(std::size_t, int, Mask)> rec = [&](std::size_t from, int left, Mask common) {
    if (common == 0) return false;
    if (left == 0) return true;
    for (std::size_t i = from; i < family.size(); ++i)
      if (!rec(i, left - 1, common & family[i])) return false;
    return true;
  };
  return t <= 1 || rec(0, t, ~Mask{0});
}

inline bool tangle_triples(const shallow::Graph& g, const std::vector<Mask>& family) {
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i; j < family.size(); ++j)
      for (std::size_t k = j; k < family.size(); ++k) {
        Mask a = family[i], b = family[j], c = family[k];
        if (a & b & c) continue;
        bool edge = false;
        for (int u = 0; u < g.vertex_count() && !edge; ++u)
          for (int v = 0; v < g.vertex_count() && !edge; ++v)
            edge = g.adjacent(u, v) && (has(a, u) || has(a, v)) && (has(b, u) || has(b, v)) &&
                   (has(c, u) || has(c, v));
        if (!edge) return false;
      }
  return true;
}

inline bool is_bramble(const shallow::Graph& g, const std::vector<Mask>& family, int r) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    int rad = radius(g, family[i]);
    if (rad >= kInf || (r >= 0 && rad > r)) return false;
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!touches(g, family[i], family[j])) return false;
  }
  return true;
}

// Maximum order over all families of candidates (n <= 4 only).
// t > 1 adds t-wise intersection; tangle adds the triple condition.
inline int bramble_number(const shallow::Graph& g, int r, int t = 1, bool tangle = false) {
  auto cand = candidates(g, r);
  const std::size_t c = cand.size();
  int best = 0;
  for (Mask pick = 1; pick < (Mask{1} << c); ++pick) {
    std::vector<Mask> fam;
    for (std::size_t i = 0; i < c; ++i)
      if (has(pick, static_cast<int>(i))) fam.push_back(cand[i]);
    bool ok = true;
    for (std::size_t i = 0; i < fam.size() && ok; ++i)
      for (std::size_t j = i + 1; j < fam.size() && ok; ++j) ok = touches(g, fam[i], fam[j]);
    if (!ok || !t_intersecting(fam, t) || (tangle && !tangle_triples(g, fam))) continue;
    best = std::max(best, min_hitting_set(g, fam));
  }
  return best;
}

// S is k-linked: every X with |X| < k leaves a candidate outside X with a majority of S.
inline bool k_linked(const shallow::Graph& g, Mask s, int k, int r) {
  auto cand = candidates(g, r);
  const int n = g.vertex_count();
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    if (popcount(x) >= k) continue;
    bool found = std::any_of(cand.begin(), cand.end(),
                             [&](Mask b) { return (b & x) == 0 && 2 * popcount(b & s) > popcount(s); });
    if (!found) return false;
  }
  return true;
}

inline int linkedness(const shallow::Graph& g, int r) {
  const int n = g.vertex_count();
  int best = 0;
  for (Mask s = 1; s < (Mask{1} << n); ++s)
    for (int k = best + 1; k <= n + 1 && k_linked(g, s, k, r); ++k) best = k;
  return best;
}

// Distance matrices of G - Y for every Y, indexed by the mask of Y.
using DeletionTable = std::vector<std::vector<std::vector<int>>>;

inline DeletionTable deletion_table(const shallow::Graph& g) {
  const int n = g.vertex_count();
  const Mask all = (Mask{1} << n) - 1;
  DeletionTable t(std::size_t{1} << n);
  for (Mask y = 0; y <= all; ++y) t[y] = distances(g, all & ~y);
  return t;
}

// Length of a shortest A-B path in G - Y (kInf if none).
inline int path_length(const DeletionTable& table, Mask a, Mask b, Mask y) {
  const auto& d = table[y];
  int best = kInf;
  for (int u : members(a & ~y))
    for (int v : members(b & ~y)) best = std::min(best, d[u][v]);
  return best;
}

// Literal (A, B, Y) enumeration; r < 0 means unbounded.
inline bool well_linked(const shallow::Graph& g, const DeletionTable& table, Mask s, int r, bool disjoint = false) {
  const int n = g.vertex_count();
  for (Mask a = s;; a = (a - 1) & s) {
    for (Mask b = s;; b = (b - 1) & s) {
      if (a != 0 && b != 0 && popcount(a) == popcount(b) && !(disjoint && (a & b))) {
        for (Mask y = 0; y < (Mask{1} << n); ++y) {
          if (popcount(y) >= popcount(a)) continue;
          int len = path_length(table, a, b, y);
          if (len >= kInf || (r >= 0 && len > r)) return false;
        }
      }
      if (b == 0) break;
    }
    if (a == 0) break;
  }
  return true;
}

inline bool well_linked(const shallow::Graph& g, Mask s, int r, bool disjoint = false) {
  return well_linked(g, deletion_table(g), s, r, disjoint);
}

inline int well_linkedness(const shallow::Graph& g, int r, bool disjoint = false) {
  const int n = g.vertex_count();
  const auto table = deletion_table(g);
  int best = 0;
  for (Mask s = 1; s < (Mask{1} << n); ++s)
    if (popcount(s) > best && well_linked(g, table, s, r, disjoint)) best = popcount(s);
  return best;
}

// Calls fn(branch sets) for every assignment of vertices to k labels or to none,
// with every label used. Branch sets are not checked.
inline void for_each_labelling(int n, int k, const std::function<void(const std::vector<Mask>&)>& fn) {
  std::vector<int> label(n, 0);
  while (true) {
    std::vector<Mask> sets(k, 0);
    for (int v = 0; v < n; ++v)
      if (label[v] > 0) sets[label[v] - 1] |= Mask{1} << v;
    if (std::all_of(sets.begin(), sets.end(), [](Mask m) { return m != 0; })) fn(sets);
    int i = 0;
    while (i < n && label[i] == k) label[i++] = 0;
    if (i == n) return;
    ++label[i];
  }
}

inline bool branch_sets_ok(const shallow::Graph& g, const std::vector<Mask>& sets, int r) {
  for (Mask m : sets) {
    int rad = radius(g, m);
    if (rad >= kInf || (r >= 0 && rad > r)) return false;
  }
  return true;
}

inline int contracted_edges(const shallow::Graph& g, const std::vector<Mask>& sets) {
  int e = 0;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) e += touches(g, sets[i], sets[j]) && !(sets[i] & sets[j]);
  return e;
}

inline int shallow_clique(const shallow::Graph& g, int r) {
  const int n = g.vertex_count();
  int best = 0;
  for (int k = 1; k <= n; ++k) {
    bool found = false;
    for_each_labelling(n, k, [&](const std::vector<Mask>& sets) {
      if (found || !branch_sets_ok(g, sets, r)) return;
      found = contracted_edges(g, sets) == k * (k - 1) / 2;
    });
    if (!found) break;
    best = k;
  }
  return best;
}

// Largest edges / branch sets as a (num, den) pair.
inline std::pair<int, int> shallow_density(const shallow::Graph& g, int r) {
  const int n = g.vertex_count();
  std::pair<int, int> best{0, 1};
  for (int k = 1; k <= n; ++k) {
    for_each_labelling(n, k, [&](const std::vector<Mask>& sets) {
      if (!branch_sets_ok(g, sets, r)) return;
      int e = contracted_edges(g, sets);
      if (e * best.second > best.first * k) best = {e, k};
    });
  }
  return best;
}

// Pattern given as a graph: does a depth-r model exist?
inline bool has_minor(const shallow::Graph& g, const shallow::Graph& pattern, int r) {
  bool found = false;
  for_each_labelling(g.vertex_count(), pattern.vertex_count(), [&](const std::vector<Mask>& sets) {
    if (found || !branch_sets_ok(g, sets, r)) return;
    for (auto [u, v] : pattern.edges())
      if (!touches(g, sets[u], sets[v])) return;
    found = true;
  });
  return found;
}

}  // namespace oracle
