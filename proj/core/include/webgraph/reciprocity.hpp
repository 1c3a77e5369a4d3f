#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "webgraph/correlations.hpp"
#include "webgraph/degree_stats.hpp"
#include "webgraph/graph.hpp"
#include "webgraph/undirected.hpp"

namespace webgraph {

/// Split of every node's links into non-reciprocal incoming (q_in),
/// non-reciprocal outgoing (q_out) and reciprocal (q_r) ones. A reciprocal
/// pair u<->v counts once in q_r of each endpoint, so k_in = q_in + q_r and
/// k_out = q_out + q_r.
struct ReciprocalDecomposition {
  std::vector<std::uint64_t> q_in;
  std::vector<std::uint64_t> q_out;
  std::vector<std::uint64_t> q_r;
  std::vector<Edge> reciprocal_pairs;     ///< undirected, first < second, sorted
  std::vector<Edge> nonreciprocal_edges;  ///< directed, sorted

  NodeId node_count() const noexcept { return static_cast<NodeId>(q_r.size()); }
};

ReciprocalDecomposition decompose(const DirectedGraph& g, unsigned workers = 1);

/// Fraction of directed edges whose reverse edge is present.
Stat reciprocity_fraction(const ReciprocalDecomposition& d);

struct RDegreeStats {
  DegreeHistogram histogram;
  DegreeSummary summary;
  std::optional<PowerLawFit> fit;
  std::string fit_error;  ///< set when fit is empty
};

/// q_r histogram and moments; the power-law fit uses the KS-selected range
/// unless k_min is given.
RDegreeStats r_degree_stats(const ReciprocalDecomposition& d, std::optional<std::uint64_t> k_min = std::nullopt);

struct CrossedNonReciprocal {
  RatioEstimate in_out;  ///< <q_in q_out>/(<q_in><q_out>)
  RatioEstimate in_r;    ///< <q_in q_r>/(<q_in><q_r>)
  RatioEstimate out_r;   ///< <q_out q_r>/(<q_out><q_r>)
};

CrossedNonReciprocal crossed_one_point_nr(const ReciprocalDecomposition& d);

struct NonReciprocalMeans {
  CorrelationProfile out_given_in;  ///< <q_out(q_in)> / <q_out>
  CorrelationProfile r_given_in;    ///< <q_r(q_in)> / <q_r>
  CorrelationProfile r_given_out;   ///< <q_r(q_out)> / <q_r>
};

NonReciprocalMeans conditional_means_nr(const ReciprocalDecomposition& d);

/// The undirected graph of reciprocal pairs over the full node set. A node's
/// degree here equals its q_r; nodes with q_r = 0 are isolated.
struct ReciprocalSubgraph {
  UndirectedGraph graph;
  std::uint64_t member_count = 0;  ///< nodes with q_r >= 1
};

ReciprocalSubgraph reciprocal_subgraph(const ReciprocalDecomposition& d);

/// The graph restricted to non-reciprocal edges; directed_knn on it gives the
/// non-reciprocal versions of the directed correlation functions.
DirectedGraph nonreciprocal_graph(const DirectedGraph& g, const ReciprocalDecomposition& d);

enum class ReciprocalKnn : std::uint8_t {
  InNnOfIn,    ///< q_in of reciprocal neighbors vs q_in, / kappa_r,in
  OutNnOfIn,   ///< q_out of reciprocal neighbors vs q_in, / kappa_r,out
  InNnOfOut,   ///< q_in of reciprocal neighbors vs q_out, / kappa_r,in
  OutNnOfOut,  ///< q_out of reciprocal neighbors vs q_out, / kappa_r,out
};

inline constexpr ReciprocalKnn kReciprocalKnnVariants[] = {
    ReciprocalKnn::InNnOfIn, ReciprocalKnn::OutNnOfIn, ReciprocalKnn::InNnOfOut, ReciprocalKnn::OutNnOfOut};

std::string_view token(ReciprocalKnn v) noexcept;

struct ReciprocalKappas {
  Stat r_in;   ///< <q_r q_in>/<q_r>
  Stat r_out;  ///< <q_r q_out>/<q_r>
};

ReciprocalKappas reciprocal_kappas(const ReciprocalDecomposition& d);

/// Neighbor q-degrees averaged over reciprocal neighbors and divided by q_r
/// of the node, grouped by the node's q_in or q_out. Nodes with q_r = 0 are
/// excluded; if no node has q_r >= 1 the profile is empty.
CorrelationProfile reciprocal_knn(const ReciprocalDecomposition& d, const ReciprocalSubgraph& sub,
                                  ReciprocalKnn variant, unsigned workers = 1);
CorrelationProfile reciprocal_knn(const DirectedGraph& g, const ReciprocalDecomposition& d,
                                  ReciprocalKnn variant, unsigned workers = 1);

/// c_j = 2 n_link / (q_r (q_r - 1)); undefined for q_r < 2.
Stat clustering(const ReciprocalSubgraph& sub, NodeId node);

/// All per-node clustering coefficients (NaN where q_r < 2).
std::vector<double> clustering_coefficients(const ReciprocalSubgraph& sub, unsigned workers = 1);

/// c(q_r) averaged over nodes of each subgraph degree >= 2.
CorrelationProfile avg_clustering_by_degree(const ReciprocalSubgraph& sub, unsigned workers = 1);

/// q_r,nn(q_r) of the reciprocal subgraph.
CorrelationProfile reciprocal_subgraph_knn(const ReciprocalSubgraph& sub, unsigned workers = 1);

/// Per-node raw points behind the class averages, for nodes with q_r >= 1.
struct ScatterPoint {
  NodeId node = 0;
  std::uint64_t q_r = 0;
  double knn = 0.0;
  double clustering = 0.0;  ///< NaN for q_r = 1
};

std::vector<ScatterPoint> reciprocal_scatter(const ReciprocalSubgraph& sub, unsigned workers = 1);

}  // namespace webgraph
