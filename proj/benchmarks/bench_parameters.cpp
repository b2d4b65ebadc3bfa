#include <benchmark/benchmark.h>

#include <string>

#include "shallow/bramble.hpp"
#include "shallow/coloring.hpp"
#include "shallow/generators.hpp"
#include "shallow/graph6.hpp"
#include "shallow/linkedness.hpp"
#include "shallow/minors.hpp"

using namespace shallow;

static Graph bench_graph(int n) { return gnp_graph(n, 0.4, 11); }

static void BM_ScolExact(benchmark::State& state) {
  Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scol_exact(g, Depth(2)).value);
}
BENCHMARK(BM_ScolExact)->DenseRange(5, 9, 2)->Unit(benchmark::kMillisecond);

static void BM_TreewidthExact(benchmark::State& state) {
  Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(treewidth_exact(g));
}
BENCHMARK(BM_TreewidthExact)->DenseRange(8, 16, 4);

static void BM_BrambleNumber(benchmark::State& state) {
  Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bramble_number(g, Depth(1)).value);
}
BENCHMARK(BM_BrambleNumber)->DenseRange(5, 7, 1)->Unit(benchmark::kMillisecond);

static void BM_Linkedness(benchmark::State& state) {
  Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(linkedness(g, Depth(1)).value);
}
BENCHMARK(BM_Linkedness)->DenseRange(5, 8, 1)->Unit(benchmark::kMillisecond);

static void BM_ShallowClique(benchmark::State& state) {
  Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(shallow_clique_number(g, Depth(1)).size);
}
BENCHMARK(BM_ShallowClique)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_ParseGraph6(benchmark::State& state) {
  const std::string text = encode_graph6(bench_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(parse_graph6(text).edge_count());
}
BENCHMARK(BM_ParseGraph6)->Arg(10)->Arg(40)->Arg(64);
BENCHMARK_MAIN();
