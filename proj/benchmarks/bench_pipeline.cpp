#include <benchmark/benchmark.h>

#include <map>

#include "webgraph/components.hpp"
#include "webgraph/correlations.hpp"
#include "webgraph/crawl_sim.hpp"
#include "webgraph/degree_stats.hpp"
#include "webgraph/generator.hpp"
#include "webgraph/reciprocity.hpp"

using namespace webgraph;

namespace {

GeneratorConfig config(NodeId n) {
  GeneratorConfig cfg;
  cfg.node_count = n;
  cfg.in_law = DegreeLaw::zeta(2.1, 2);
  cfg.out_law = DegreeLaw::poisson(8);
  cfg.target_reciprocity = 0.05;
  cfg.rng_seed = 1;
  return cfg;
}

// generated once per size and shared by every benchmark
const DirectedGraph& graph(NodeId n) {
  static std::map<NodeId, DirectedGraph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, generate(config(n)).graph).first;
  return it->second;
}

void set_edges(benchmark::State& state, const DirectedGraph& g) {
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * g.edge_count()));
}

}  // namespace

static void BM_Generate(benchmark::State& state) {
  const auto cfg = config(static_cast<NodeId>(state.range(0)));
  std::uint64_t edges = 0;
  for (auto _ : state) {
    auto g = generate(cfg);
    edges = g.graph.edge_count();
    benchmark::DoNotOptimize(g);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * edges));
}
BENCHMARK(BM_Generate)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_BowTie(benchmark::State& state) {
  const auto& g = graph(static_cast<NodeId>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bowtie_decompose(g));
  set_edges(state, g);
}
BENCHMARK(BM_BowTie)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_FitPowerLaw(benchmark::State& state) {
  const auto h = degree_histogram(graph(static_cast<NodeId>(state.range(0))), DegreeKind::In);
  for (auto _ : state) benchmark::DoNotOptimize(fit_powerlaw(h));
}
BENCHMARK(BM_FitPowerLaw)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_DirectedKnn(benchmark::State& state) {
  const auto& g = graph(static_cast<NodeId>(state.range(0)));
  const auto workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state)
    for (auto v : kDirectedKnnVariants) benchmark::DoNotOptimize(directed_knn(g, v, workers));
  set_edges(state, g);
}
BENCHMARK(BM_DirectedKnn)->Args({1000000, 1})->Args({1000000, 4})->Unit(benchmark::kMillisecond);

static void BM_Reciprocity(benchmark::State& state) {
  const auto& g = graph(static_cast<NodeId>(state.range(0)));
  for (auto _ : state) {
    const auto d = decompose(g);
    const auto sub = reciprocal_subgraph(d);
    benchmark::DoNotOptimize(avg_clustering_by_degree(sub));
  }
  set_edges(state, g);
}
BENCHMARK(BM_Reciprocity)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_Crawl(benchmark::State& state) {
  const auto& g = graph(static_cast<NodeId>(state.range(0)));
  const auto p = bowtie_decompose(g);
  CrawlConfig crawl;
  for (NodeId v = 0; crawl.seeds.empty(); ++v)
    if (p.class_of[v] == BowTieClass::Scc) crawl.seeds.push_back(v);
  crawl.strategy = static_cast<CrawlStrategy>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(simulate_crawl(g, crawl));
  set_edges(state, g);
}
BENCHMARK(BM_Crawl)
    ->Args({1000000, static_cast<int>(CrawlStrategy::Bfs)})
    ->Args({1000000, static_cast<int>(CrawlStrategy::RandomFrontier)})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
