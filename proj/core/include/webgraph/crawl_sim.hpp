#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "webgraph/errors.hpp"
#include "webgraph/generator.hpp"
#include "webgraph/graph.hpp"

namespace webgraph {

enum class CrawlStrategy : std::uint8_t { Bfs, Dfs, RandomFrontier };
enum class FrontierMode : std::uint8_t { FetchedOnly, FrontierInclusive };

std::string_view token(CrawlStrategy s) noexcept;
std::string_view token(FrontierMode m) noexcept;
CrawlStrategy parse_strategy(std::string_view s);
FrontierMode parse_frontier_mode(std::string_view s);

struct CrawlConfig {
  std::vector<NodeId> seeds;
  CrawlStrategy strategy = CrawlStrategy::Bfs;
  /// Maximum number of fetched nodes; unlimited when empty.
  std::optional<std::uint64_t> budget;
  FrontierMode frontier_mode = FrontierMode::FetchedOnly;
  std::uint64_t rng_seed = kDefaultSeed;  ///< used by RandomFrontier only
};

struct CrawlOutcome {
  DirectedGraph observed;
  std::vector<NodeId> observed_to_true;  ///< ascending
  std::vector<NodeId> fetch_order;       ///< true ids
  std::uint64_t discovered = 0;          ///< fetched plus frontier
  CrawlConfig config;
  std::uint64_t source_fingerprint = 0;
  NodeId source_node_count = 0;
};

/// Simulates a crawler that only follows out-links. Fetching a node reveals
/// its out-links; targets not yet seen join the frontier.
CrawlOutcome simulate_crawl(const DirectedGraph& truth, const CrawlConfig& cfg);

/// Headline statistics compared between a graph and its crawl.
struct GraphStatistics {
  NodeId nodes = 0;
  EdgeIndex edges = 0;
  double scc_pct = 0.0;
  double in_pct = 0.0;
  double out_pct = 0.0;
  Stat out_share_of_main;  ///< OUT / (SCC + IN + OUT)
  Stat gamma_in;           ///< automatic-range fit of the in-degree tail
  Stat kappa_in;
  Stat kappa_out;
  Stat reciprocity;
  Stat mean_q_r;
};

GraphStatistics measure(const DirectedGraph& g, unsigned workers = 1);

enum class BiasFlag : std::uint8_t {
  Ok,
  TotalLoss,          ///< true value nonzero, observed zero
  Emerged,            ///< true value zero, observed nonzero
  UndefinedTruth,
  UndefinedObserved,
};
std::string_view token(BiasFlag f) noexcept;

struct BiasRow {
  std::string statistic;
  Stat truth;
  Stat observed;
  Stat relative_deviation;  ///< (observed - truth) / |truth|
  BiasFlag flag = BiasFlag::Ok;
};

struct BiasReport {
  std::vector<BiasRow> rows;
  const BiasRow& row(std::string_view statistic) const;
};

BiasRow compare(std::string statistic, const Stat& truth, const Stat& observed);
BiasReport bias_report(const GraphStatistics& truth, const GraphStatistics& observed);
/// Throws ConfigError when `outcome` was not produced from `truth`.
BiasReport bias_report(const DirectedGraph& truth, const CrawlOutcome& outcome, unsigned workers = 1);

enum class SeedPolicy : std::uint8_t { Explicit, RandomScc, RandomAny };

struct EnsembleConfig {
  GeneratorConfig generator;
  CrawlConfig crawl;                      ///< seeds used when seed_policy is Explicit
  SeedPolicy seed_policy = SeedPolicy::RandomScc;
  std::size_t seed_count = 1;
  std::optional<double> budget_fraction;  ///< overrides crawl.budget, fraction of nodes
  std::size_t replicas = 1;
  std::uint64_t master_seed = kDefaultSeed;
  unsigned workers = 1;                   ///< replicas run concurrently
  bool keep_graphs = false;
};

struct ReplicaResult {
  std::size_t index = 0;
  std::uint64_t graph_seed = 0;
  std::uint64_t crawl_seed = 0;
  GenerationReport generation;
  std::vector<NodeId> seeds;
  GraphStatistics truth;
  GraphStatistics observed;
  BiasReport bias;
  std::uint64_t fetched = 0;
  std::optional<DirectedGraph> truth_graph;
  std::optional<CrawlOutcome> outcome;
};

std::vector<ReplicaResult> run_ensemble(const EnsembleConfig& cfg);

}  // namespace webgraph
