// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "kempe/connectivity.hpp"
#include "kempe/generators.hpp"
#include "kempe/minor.hpp"

using namespace kempe;

namespace {

Graph k22233() {
  const int parts[] = {2, 2, 2, 3, 3};
  return complete_multipartite(parts);
}

Graph k122222() {
  const int parts[] = {1, 2, 2, 2, 2, 2};
  return complete_multipartite(parts);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

const Graph& host(int which) {
  static const Graph graphs[] = {k22233(), k122222(), petersen_graph(), random_graph(12, 0.55, 3)};
  return graphs[which];
}

constexpr int kOrder[] = {9, 9, 6, 7};

template <MinorSearchResult (*Search)(const Graph&, int, const SearchBudget&, SearchMode)>
void BM_Minor(benchmark::State& state) {
  const Graph& g = host(static_cast<int>(state.range(0)));
  const int t = kOrder[state.range(0)];
  long long nodes = 0;
  for (auto _ : state) {
    const auto r = Search(g, t, {}, SearchMode::Pruned);
    nodes = r.nodes;
    benchmark::DoNotOptimize(r.status);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}

template <int (*Kappa)(const Graph&)>
void BM_Connectivity(benchmark::State& state) {
  const Graph g = state.range(0) == 0 ? build_cockade(std::vector<int>{1, 2, 2, 2, 2, 2}, 6, 4)
                                      : random_graph(static_cast<int>(state.range(0)), 0.5, 11);
  for (auto _ : state) benchmark::DoNotOptimize(Kappa(g));
}

}  // namespace

// 0 = K_{2,2,2,3,3}, 1 = K_{1,2,2,2,2,2} (t = 9), 2 = Petersen (t = 6), 3 = random G(12, 0.55) (t = 7)
BENCHMARK(BM_Minor<serial::find_clique_minor>)->Name("minor/serial")->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Minor<parallel::find_clique_minor>)->Name("minor/parallel")->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

// 0 = four-copy cockade, otherwise G(n, 1/2)
BENCHMARK(BM_Connectivity<serial::vertex_connectivity>)->Name("connectivity/serial")->Arg(0)->Arg(32)->Arg(64);
BENCHMARK(BM_Connectivity<parallel::vertex_connectivity>)->Name("connectivity/parallel")->Arg(0)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
