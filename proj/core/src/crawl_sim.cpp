#include "webgraph/crawl_sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <exception>
#include <mutex>
#include <thread>

#include "webgraph/components.hpp"
#include "webgraph/correlations.hpp"
#include "webgraph/degree_stats.hpp"
#include "webgraph/reciprocity.hpp"

namespace webgraph {

std::string_view token(CrawlStrategy s) noexcept {
  switch (s) {
    case CrawlStrategy::Bfs: return "bfs";
    case CrawlStrategy::Dfs: return "dfs";
    case CrawlStrategy::RandomFrontier: return "random";
  }
  return "?";
}

std::string_view token(FrontierMode m) noexcept {
  return m == FrontierMode::FetchedOnly ? "fetched" : "frontier";
}

CrawlStrategy parse_strategy(std::string_view s) {
  if (s == "bfs") return CrawlStrategy::Bfs;
  if (s == "dfs") return CrawlStrategy::Dfs;
  if (s == "random" || s == "random-frontier") return CrawlStrategy::RandomFrontier;
  throw ConfigError("unknown crawl strategy '" + std::string(s) + "' (expected bfs, dfs or random)");
}

FrontierMode parse_frontier_mode(std::string_view s) {
  if (s == "fetched") return FrontierMode::FetchedOnly;
  if (s == "frontier") return FrontierMode::FrontierInclusive;
  throw ConfigError("unknown frontier mode '" + std::string(s) + "' (expected fetched or frontier)");
}

std::string_view token(BiasFlag f) noexcept {
  switch (f) {
    case BiasFlag::Ok: return "ok";
    case BiasFlag::TotalLoss: return "total_loss";
    case BiasFlag::Emerged: return "emerged";
    case BiasFlag::UndefinedTruth: return "undefined_truth";
    case BiasFlag::UndefinedObserved: return "undefined_observed";
  }
  return "?";
}

CrawlOutcome simulate_crawl(const DirectedGraph& truth, const CrawlConfig& cfg) {
  const NodeId n = truth.node_count();
  if (cfg.seeds.empty()) throw ConfigError("crawl needs at least one seed");
  std::vector<char> discovered(n, 0), fetched(n, 0);
  std::vector<NodeId> frontier;
  std::deque<NodeId> queue;
  for (NodeId s : cfg.seeds) {
    if (s >= n) throw BoundsError("seed " + std::to_string(s) + " is not a node (n=" + std::to_string(n) + ")");
    if (discovered[s]) continue;
    discovered[s] = 1;
    if (cfg.strategy == CrawlStrategy::Bfs) queue.push_back(s);
    else frontier.push_back(s);
  }
  if (cfg.strategy == CrawlStrategy::Dfs) std::reverse(frontier.begin(), frontier.end());
  if (cfg.budget && *cfg.budget < frontier.size() + queue.size())
    throw ConfigError("page budget " + std::to_string(*cfg.budget) + " is smaller than the " +
                      std::to_string(frontier.size() + queue.size()) + " distinct seeds");

  const std::uint64_t budget = cfg.budget.value_or(std::numeric_limits<std::uint64_t>::max());
  std::mt19937_64 rng(cfg.rng_seed);
  CrawlOutcome out;
  std::uint64_t seen = frontier.size() + queue.size();
  while (out.fetch_order.size() < budget && !(queue.empty() && frontier.empty())) {
    NodeId u;
    switch (cfg.strategy) {
      case CrawlStrategy::Bfs:
        u = queue.front();
        queue.pop_front();
        break;
      case CrawlStrategy::Dfs:
        u = frontier.back();
        frontier.pop_back();
        break;
      case CrawlStrategy::RandomFrontier: {
        const auto i = uniform_below(rng, frontier.size());
        u = frontier[i];
        frontier[i] = frontier.back();
        frontier.pop_back();
        break;
      }
    }
    fetched[u] = 1;
    out.fetch_order.push_back(u);
    auto nbrs = truth.out_neighbors(u);
    // DFS pushes in reverse so the smallest target is expanded first.
    auto visit = [&](NodeId v) {
      if (discovered[v]) return;
      discovered[v] = 1;
      ++seen;
      if (cfg.strategy == CrawlStrategy::Bfs) queue.push_back(v);
      else frontier.push_back(v);
    };
    if (cfg.strategy == CrawlStrategy::Dfs)
      for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) visit(*it);
    else
      for (NodeId v : nbrs) visit(v);
  }
  out.discovered = seen;

  const auto& keep = cfg.frontier_mode == FrontierMode::FetchedOnly ? fetched : discovered;
  std::vector<NodeId> to_obs(n, std::numeric_limits<NodeId>::max());
  std::vector<OriginalId> ids;
  for (NodeId v = 0; v < n; ++v) {
    if (!keep[v]) continue;
    to_obs[v] = static_cast<NodeId>(out.observed_to_true.size());
    out.observed_to_true.push_back(v);
    ids.push_back(truth.original_id(v));
  }
  std::vector<Edge> edges;
  for (NodeId u : out.fetch_order)
    for (NodeId v : truth.out_neighbors(u))
      if (keep[v]) edges.emplace_back(to_obs[u], to_obs[v]);
  out.observed = DirectedGraph::from_edges(std::move(ids), std::move(edges));
  out.config = cfg;
  out.source_fingerprint = fingerprint(truth);
  out.source_node_count = n;
  return out;
}

GraphStatistics measure(const DirectedGraph& g, unsigned workers) {
  GraphStatistics s;
  s.nodes = g.node_count();
  s.edges = g.edge_count();
  const auto bt = bowtie_decompose(g);
  s.scc_pct = bt.percentage(BowTieClass::Scc);
  s.in_pct = bt.percentage(BowTieClass::In);
  s.out_pct = bt.percentage(BowTieClass::Out);
  const auto main = bt.size(BowTieClass::Scc) + bt.size(BowTieClass::In) + bt.size(BowTieClass::Out);
  s.out_share_of_main = main ? Stat::of(static_cast<double>(bt.size(BowTieClass::Out)) / static_cast<double>(main))
                             : Stat::undefined("empty graph");
  try {
    s.gamma_in = Stat::of(fit_powerlaw(degree_histogram(g, DegreeKind::In, workers)).gamma);
  } catch (const FitError& e) {
    s.gamma_in = Stat::undefined(e.what());
  }
  const auto kap = directed_kappas(g);
  s.kappa_in = kap.in;
  s.kappa_out = kap.out;
  const auto d = decompose(g, workers);
  s.reciprocity = reciprocity_fraction(d);
  if (s.nodes == 0) {
    s.mean_q_r = Stat::undefined("empty graph");
  } else {
    std::uint64_t total = 0;
    for (auto q : d.q_r) total += q;
    s.mean_q_r = Stat::of(static_cast<double>(total) / static_cast<double>(s.nodes));
  }
  return s;
}

BiasRow compare(std::string statistic, const Stat& truth, const Stat& observed) {
  BiasRow r{std::move(statistic), truth, observed, {}, BiasFlag::Ok};
  if (!truth) {
    r.flag = BiasFlag::UndefinedTruth;
    r.relative_deviation = Stat::undefined("true value undefined");
  } else if (!observed) {
    r.flag = BiasFlag::UndefinedObserved;
    r.relative_deviation = Stat::undefined("observed value undefined");
  } else if (truth.value() == 0.0) {
    if (observed.value() == 0.0) {
      r.relative_deviation = Stat::of(0.0);
    } else {
      r.flag = BiasFlag::Emerged;
      r.relative_deviation = Stat::undefined("true value is zero");
    }
  } else {
    r.relative_deviation = Stat::of((observed.value() - truth.value()) / std::abs(truth.value()));
    if (observed.value() == 0.0) r.flag = BiasFlag::TotalLoss;
  }
  return r;
}

const BiasRow& BiasReport::row(std::string_view statistic) const {
  for (const auto& r : rows)
    if (r.statistic == statistic) return r;
  throw BoundsError("no bias row '" + std::string(statistic) + "'");
}

BiasReport bias_report(const GraphStatistics& truth, const GraphStatistics& observed) {
  BiasReport rep;
  rep.rows.push_back(compare("scc_pct", Stat::of(truth.scc_pct), Stat::of(observed.scc_pct)));
  rep.rows.push_back(compare("in_pct", Stat::of(truth.in_pct), Stat::of(observed.in_pct)));
  rep.rows.push_back(compare("out_pct", Stat::of(truth.out_pct), Stat::of(observed.out_pct)));
  rep.rows.push_back(compare("out_share_of_main", truth.out_share_of_main, observed.out_share_of_main));
  rep.rows.push_back(compare("gamma_in", truth.gamma_in, observed.gamma_in));
  rep.rows.push_back(compare("kappa_in", truth.kappa_in, observed.kappa_in));
  rep.rows.push_back(compare("kappa_out", truth.kappa_out, observed.kappa_out));
  rep.rows.push_back(compare("reciprocity", truth.reciprocity, observed.reciprocity));
  rep.rows.push_back(compare("mean_q_r", truth.mean_q_r, observed.mean_q_r));
  return rep;
}

BiasReport bias_report(const DirectedGraph& truth, const CrawlOutcome& outcome, unsigned workers) {
  if (truth.node_count() != outcome.source_node_count || fingerprint(truth) != outcome.source_fingerprint)
    throw ConfigError("crawl outcome was not produced from this graph");
  return bias_report(measure(truth, workers), measure(outcome.observed, workers));
}

namespace {

ReplicaResult run_replica(const EnsembleConfig& cfg, std::size_t index) {
  ReplicaResult r;
  r.index = index;
  r.graph_seed = derive_seed(cfg.master_seed, 2 * index);
  r.crawl_seed = derive_seed(cfg.master_seed, 2 * index + 1);

  GeneratorConfig gen = cfg.generator;
  gen.rng_seed = r.graph_seed;
  auto generated = generate(gen);
  r.generation = generated.report;
  const auto& g = generated.graph;

  CrawlConfig crawl = cfg.crawl;
  crawl.rng_seed = r.crawl_seed;
  std::mt19937_64 rng(derive_seed(r.crawl_seed, 0));
  if (cfg.seed_policy != SeedPolicy::Explicit) {
    std::vector<NodeId> pool;
    if (cfg.seed_policy == SeedPolicy::RandomScc) {
      const auto bt = bowtie_decompose(g);
      for (NodeId v = 0; v < g.node_count(); ++v)
        if (bt.class_of[v] == BowTieClass::Scc) pool.push_back(v);
    } else {
      pool.resize(g.node_count());
      for (NodeId v = 0; v < g.node_count(); ++v) pool[v] = v;
    }
    if (pool.empty()) throw ConfigError("no node available to seed the crawl");
    const std::size_t k = std::min(cfg.seed_count, pool.size());
    for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + uniform_below(rng, pool.size() - i)]);
    crawl.seeds.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  if (cfg.budget_fraction) {
    if (!(*cfg.budget_fraction > 0.0 && *cfg.budget_fraction <= 1.0))
      throw ConfigError("budget fraction must lie in (0,1]");
    crawl.budget = static_cast<std::uint64_t>(std::ceil(*cfg.budget_fraction * g.node_count()));
  }
  r.seeds = crawl.seeds;

  auto outcome = simulate_crawl(g, crawl);
  r.fetched = outcome.fetch_order.size();
  r.truth = measure(g);
  r.observed = measure(outcome.observed);
  r.bias = bias_report(r.truth, r.observed);
  if (cfg.keep_graphs) {
    r.truth_graph = std::move(generated.graph);
    r.outcome = std::move(outcome);
  }
  return r;
}

}  // namespace

std::vector<ReplicaResult> run_ensemble(const EnsembleConfig& cfg) {
  std::vector<ReplicaResult> results(cfg.replicas);
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.workers, static_cast<unsigned>(cfg.replicas)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cfg.replicas;) {
      try {
        results[i] = run_replica(cfg, i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace webgraph
