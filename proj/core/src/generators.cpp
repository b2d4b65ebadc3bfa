#include "shallow/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <unordered_set>

#include "shallow/errors.hpp"
#include "shallow/graph6.hpp"
#include "shallow/metric.hpp"

namespace shallow {
namespace {

int require(const std::optional<int>& value, const char* family, const char* name, int min_value) {
  if (!value) throw InvalidArgument(std::string(family) + " needs --" + name);
  if (*value < min_value) {
    throw InvalidArgument(std::string(family) + ": " + name + " must be at least " + std::to_string(min_value));
  }
  return *value;
}

// Hamiltonian cycle 0..n-1 plus chords i -> i + shifts[i mod len].
Graph lcf_graph(int n, const std::vector<int>& shifts, int repeats) {
  std::set<Edge> edges;
  for (int i = 0; i < n; ++i) edges.insert({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
  const int len = static_cast<int>(shifts.size());
  for (int i = 0; i < len * repeats; ++i) {
    int j = ((i + shifts[i % len]) % n + n) % n;
    edges.insert({std::min(i, j), std::max(i, j)});
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return {n, list};
}

std::uint64_t uniform_bits(std::mt19937_64& rng) { return rng(); }

double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(uniform_bits(rng) >> 11) * (1.0 / 9007199254740992.0);
}

// Adjacency code of g relabelled by perm, first pair (0,1) most significant.
std::uint64_t permuted_code(const Graph& g, const std::vector<int>& inverse) {
  const int n = g.vertex_count();
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(inverse[i], inverse[j]) ? 1U : 0U);
  }
  return code;
}

}  // namespace

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return {n, edges};
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return {n, edges};
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, n - 1);
  return {n, edges};
}

Graph grid_graph(int t) {
  std::vector<Edge> edges;
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j) {
      if (j + 1 < t) edges.emplace_back(i * t + j, i * t + j + 1);
      if (i + 1 < t) edges.emplace_back(i * t + j, (i + 1) * t + j);
    }
  }
  return {t * t, edges};
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  return {10, edges};
}

Graph heawood_graph() { return lcf_graph(14, {5, -5}, 7); }
Graph mcgee_graph() { return lcf_graph(24, {12, 7, -7}, 8); }
Graph tutte_coxeter_graph() { return lcf_graph(30, {-13, -9, 7, -7, 9, 13}, 5); }

Graph tutte_12_cage() {
  return lcf_graph(126, {17, 27, -13, -59, -35, 35, -11, 13, -53, 53, -27, 21, 57, 11, -21, -57, 59, -17}, 7);
}

Graph gnp_graph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw InvalidArgument("gnp: negative n");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("gnp: p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (unit_interval(rng) < p) edges.emplace_back(u, v);
  return {n, edges};
}

std::optional<Graph> random_regular_graph(int n, int d, std::uint64_t seed, int attempts) {
  if (n <= 0 || d < 0 || d >= n || (n * d) % 2 != 0) throw InvalidArgument("random regular: invalid (n, d)");
  std::mt19937_64 rng(seed);
  std::vector<int> stubs;
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < d; ++i) stubs.push_back(v);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    // Fisher-Yates with our own draw so the sequence is library independent.
    for (std::size_t i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[uniform_bits(rng) % i]);
    std::set<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i < stubs.size() && simple; i += 2) {
      int u = std::min(stubs[i], stubs[i + 1]);
      int v = std::max(stubs[i], stubs[i + 1]);
      simple = u != v && edges.insert({u, v}).second;
    }
    if (simple) {
      std::vector<Edge> list(edges.begin(), edges.end());
      return Graph(n, list);
    }
  }
  return std::nullopt;
}

Graph generate(std::string_view family, const FamilyParams& params) {
  if (family == "complete") return complete_graph(require(params.n, "complete", "n", 1));
  if (family == "path") return path_graph(require(params.n, "path", "n", 1));
  if (family == "cycle") return cycle_graph(require(params.n, "cycle", "n", 3));
  if (family == "grid") {
    int t = params.t ? require(params.t, "grid", "t", 1) : require(params.n, "grid", "t", 1);
    return grid_graph(t);
  }
  if (family == "petersen") return petersen_graph();
  if (family == "heawood") return heawood_graph();
  if (family == "mcgee") return mcgee_graph();
  if (family == "tutte_coxeter") return tutte_coxeter_graph();
  if (family == "tutte_12_cage") return tutte_12_cage();
  if (family == "gnp") {
    if (!params.p) throw InvalidArgument("gnp needs --p");
    return gnp_graph(require(params.n, "gnp", "n", 0), *params.p, params.seed);
  }
  throw InvalidArgument("unknown graph family '" + std::string(family) + "'");
}

const std::vector<CatalogEntry>& cage_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> c;
    c.push_back({"petersen", petersen_graph(), 3, 5});
    c.push_back({"heawood", heawood_graph(), 3, 6});
    c.push_back({"mcgee", mcgee_graph(), 3, 7});
    c.push_back({"tutte_coxeter", tutte_coxeter_graph(), 3, 8});
    c.push_back({"tutte_12_cage", tutte_12_cage(), 3, 12});
    return c;
  }();
  return catalog;
}

Graph canonical_form(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 9) throw CapExceeded("canonical_form: brute force limited to 9 vertices");
  std::vector<int> inverse(n);
  std::iota(inverse.begin(), inverse.end(), 0);
  std::vector<int> best_inverse = inverse;
  std::uint64_t best = permuted_code(g, inverse);
  while (std::next_permutation(inverse.begin(), inverse.end())) {
    std::uint64_t code = permuted_code(g, inverse);
    if (code > best) {
      best = code;
      best_inverse = inverse;
    }
  }
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[best_inverse[i]] = i;
  return g.relabelled(perm);
}

std::vector<Graph> connected_graphs_up_to(int max_n) {
  if (max_n > 6) throw CapExceeded("connected_graphs_up_to: limited to 6 vertices");
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Edge> slots;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
    std::set<std::string> seen;
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      if (std::popcount(bits) + 1 < n) continue;  // too few edges to connect
      std::vector<Edge> edges;
      for (std::size_t k = 0; k < slots.size(); ++k)
        if ((bits >> k) & 1U) edges.push_back(slots[k]);
      Graph g(n, edges);
      if (!is_connected_subset(g, g.all_vertices())) continue;
      seen.insert(encode_graph6(canonical_form(g)));
    }
    for (const auto& code : seen) out.push_back(parse_graph6(code));
  }
  return out;
}

}  // namespace shallow
