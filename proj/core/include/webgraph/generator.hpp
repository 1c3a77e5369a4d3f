#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "webgraph/graph.hpp"

namespace webgraph {

inline constexpr std::uint64_t kDefaultSeed = 20070401;

/// splitmix64 of (master + stream * golden ratio): independent per-stream seeds
/// from one master seed in counter mode.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept;

/// Uniform integer in [0, bound) by rejection; bound must be positive.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Distribution of per-node stub counts.
struct DegreeLaw {
  enum class Kind : std::uint8_t { Zeta, Poisson, Geometric, Explicit };

  Kind kind = Kind::Poisson;
  double gamma = 2.5;                    ///< Zeta exponent
  std::uint64_t k_min = 1;               ///< Zeta lower bound
  std::optional<std::uint64_t> cutoff;   ///< Zeta upper bound
  double mean = 1.0;                     ///< Poisson lambda or Geometric mean (support from 0)
  std::vector<std::uint64_t> sequence;   ///< Explicit per-node values

  static DegreeLaw zeta(double gamma, std::uint64_t k_min = 1, std::optional<std::uint64_t> cutoff = std::nullopt);
  static DegreeLaw poisson(double lambda);
  static DegreeLaw geometric(double mean);
  static DegreeLaw explicit_sequence(std::vector<std::uint64_t> values);

  /// Parses `zeta:G[:KMIN[:CUTOFF]]`, `poisson:L`, `geometric:M` or `file:PATH`
  /// (whitespace-separated integers, one per node).
  static DegreeLaw parse(std::string_view text);
  std::string describe() const;

  std::vector<std::uint64_t> draw(NodeId n, std::mt19937_64& rng) const;
};

struct GeneratorConfig {
  NodeId node_count = 0;
  DegreeLaw in_law = DegreeLaw::poisson(3.0);
  DegreeLaw out_law = DegreeLaw::poisson(3.0);
  /// Desired fraction of directed edges that belong to a mutual pair.
  double target_reciprocity = 0.0;
  /// When set, each node draws its reciprocal degree from this law
  /// independently, and in_law/out_law give the non-reciprocal degrees.
  /// target_reciprocity is then ignored.
  std::optional<DegreeLaw> reciprocal_law;
  std::uint64_t rng_seed = kDefaultSeed;
};

struct GenerationReport {
  std::uint64_t in_stubs = 0;   ///< drawn, before balancing
  std::uint64_t out_stubs = 0;  ///< drawn, before balancing
  std::uint64_t stubs_thinned = 0;
  std::uint64_t reciprocal_stubs_dropped = 0;  ///< odd leftover of reciprocal stubs
  std::uint64_t mutual_pairs = 0;
  std::uint64_t directed_edges_placed = 0;
  std::uint64_t self_loops_discarded = 0;
  std::uint64_t duplicates_discarded = 0;
  double discard_rate = 0.0;
  double max_feasible_reciprocity = 0.0;
  double realized_reciprocity = 0.0;
};

struct GeneratedGraph {
  DirectedGraph graph;
  GenerationReport report;
};

/// Directed configuration model by stub matching. The larger of the in/out
/// stub totals is thinned uniformly at random to match the smaller. Mutual
/// pairs are formed first, from nodes holding both an in- and an out-stub
/// (or from the reciprocal law), and the remaining stubs are matched
/// uniformly. Self-loops and repeated edges are dropped and reported.
GeneratedGraph generate(const GeneratorConfig& cfg);

}  // namespace webgraph
