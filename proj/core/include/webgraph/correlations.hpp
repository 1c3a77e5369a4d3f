#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "webgraph/degree_stats.hpp"
#include "webgraph/errors.hpp"
#include "webgraph/graph.hpp"
#include "webgraph/undirected.hpp"

namespace webgraph {

struct ProfilePoint {
  std::uint64_t degree = 0;
  double mean_raw = 0.0;
  double mean_normalized = 0.0;  ///< NaN when the normalization is undefined
  std::uint64_t population = 0;  ///< N_k
  double stderr_raw = 0.0;       ///< sample std / sqrt(N_k); NaN for N_k = 1
  double stderr_normalized = 0.0;
};

/// Degree-class averaged curve: for each conditioning degree k, the mean of a
/// per-node quantity over the N_k nodes of that class.
struct CorrelationProfile {
  DegreeKind x_kind = DegreeKind::In;
  std::string quantity;
  std::vector<ProfilePoint> points;
  Stat normalization;

  const ProfilePoint* find(std::uint64_t degree) const noexcept;
  std::uint64_t population() const noexcept;
};

/// Groups per-node values by x-degree. Nodes with include[i] == 0 are skipped
/// (pass an empty span to include every node). Normalized means divide by
/// `normalization` when it is defined and nonzero.
CorrelationProfile class_profile(DegreeKind x_kind, std::string quantity,
                                 std::span<const std::uint64_t> x, std::span<const double> y,
                                 std::span<const char> include, Stat normalization);

/// <x y> / (<x><y>) with a delta-method standard error.
struct RatioEstimate {
  Stat value;
  double stderr = 0.0;
};

RatioEstimate crossed_ratio(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y);

/// Heterogeneity parameters of a directed graph.
struct DirectedKappas {
  Stat in;      ///< <k_in^2>/<k_in>
  Stat out;     ///< <k_out^2>/<k_out>
  Stat in_out;  ///< <k_in k_out>/<k_in>
};

DirectedKappas directed_kappas(const DirectedGraph& g);

/// <k_out(k_in)>, normalized by <k_out>. Includes the k_in = 0 class.
CorrelationProfile avg_out_given_in(const DirectedGraph& g, unsigned workers = 1);

/// <k_in k_out> / (<k_in><k_out>).
RatioEstimate crossed_one_point(const DirectedGraph& g);

/// Undirected k_nn(k), normalized by kappa = <k^2>/<k>. Degree-0 nodes excluded.
CorrelationProfile knn_undirected(const UndirectedGraph& g, unsigned workers = 1);

enum class DirectedKnn : std::uint8_t {
  InNnOfIn,    ///< in-degree of in-neighbors vs k_in, / kappa_in,out
  OutNnOfIn,   ///< out-degree of in-neighbors vs k_in, / kappa_out
  InNnOfOut,   ///< in-degree of out-neighbors vs k_out, / kappa_in
  OutNnOfOut,  ///< out-degree of out-neighbors vs k_out, / kappa_in,out
};

inline constexpr DirectedKnn kDirectedKnnVariants[] = {DirectedKnn::InNnOfIn, DirectedKnn::OutNnOfIn,
                                                       DirectedKnn::InNnOfOut, DirectedKnn::OutNnOfOut};

std::string_view token(DirectedKnn v) noexcept;

/// Directed nearest-neighbor degree functions. Per node i the mean of the
/// neighbor degree over in-neighbors (first two variants) or out-neighbors
/// (last two), averaged over nodes with the same conditioning degree. Nodes
/// with zero conditioning degree are excluded.
CorrelationProfile directed_knn(const DirectedGraph& g, DirectedKnn variant, unsigned workers = 1);

struct LogBinnedPoint {
  double lower = 0.0;
  double upper = 0.0;
  double center = 0.0;
  double mean_raw = 0.0;
  double mean_normalized = 0.0;
  std::uint64_t population = 0;
};

/// Presentation-only: population-weighted class means over logarithmic bins
/// of the conditioning degree (degree 0 kept in its own bin).
std::vector<LogBinnedPoint> log_binned(const CorrelationProfile& p, unsigned bins_per_decade = 5);

}  // namespace webgraph
