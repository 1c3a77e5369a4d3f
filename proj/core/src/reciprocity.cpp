#include "webgraph/reciprocity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "webgraph/parallel.hpp"

namespace webgraph {

namespace {

__extension__ typedef unsigned __int128 u128;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// v -> u exists? Search whichever of in(u) / out(v) is shorter.
bool reverse_present(const DirectedGraph& g, NodeId u, NodeId v) {
  auto in_u = g.in_neighbors(u);
  auto out_v = g.out_neighbors(v);
  if (in_u.size() <= out_v.size()) return std::binary_search(in_u.begin(), in_u.end(), v);
  return std::binary_search(out_v.begin(), out_v.end(), u);
}

Stat mean_of(std::span<const std::uint64_t> v, const char* what) {
  if (v.empty()) return Stat::undefined(std::string(what) + ": no nodes");
  u128 s = 0;
  for (auto x : v) s += x;
  return Stat::of(static_cast<double>(s) / static_cast<double>(v.size()));
}

Stat mixed_kappa(std::span<const std::uint64_t> r, std::span<const std::uint64_t> q, const char* what) {
  u128 num = 0, den = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    num += u128(r[i]) * q[i];
    den += r[i];
  }
  if (den == 0) return Stat::undefined(std::string(what) + ": no reciprocal links");
  return Stat::of(static_cast<double>(num) / static_cast<double>(den));
}

std::uint64_t links_among_neighbors(const UndirectedGraph& g, NodeId j, std::vector<std::uint32_t>& stamp,
                                    std::uint32_t mark) {
  auto nb = g.neighbors(j);
  for (NodeId u : nb) stamp[u] = mark;
  std::uint64_t links = 0;
  for (NodeId u : nb)
    for (NodeId w : g.neighbors(u))
      if (w > u && stamp[w] == mark) ++links;
  return links;
}

}  // namespace

ReciprocalDecomposition decompose(const DirectedGraph& g, unsigned workers) {
  const NodeId n = g.node_count();
  ReciprocalDecomposition d;
  d.q_in.resize(n);
  d.q_out.resize(n);
  d.q_r.resize(n);
  std::vector<char> mutual(g.edge_count(), 0);
  const auto offsets = g.out_offsets();
  parallel_chunks(n, workers, [&](unsigned, std::size_t begin, std::size_t end) {
    for (auto u = static_cast<NodeId>(begin); u < end; ++u) {
      std::uint64_t r = 0;
      auto out = g.out_neighbors(u);
      for (std::size_t i = 0; i < out.size(); ++i)
        if (reverse_present(g, u, out[i])) {
          mutual[offsets[u] + i] = 1;
          ++r;
        }
      d.q_r[u] = r;
      d.q_out[u] = g.out_degree(u) - r;
      d.q_in[u] = g.in_degree(u) - r;
    }
  });
  for (NodeId u = 0; u < n; ++u) {
    auto out = g.out_neighbors(u);
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (!mutual[offsets[u] + i]) d.nonreciprocal_edges.emplace_back(u, out[i]);
      else if (u < out[i]) d.reciprocal_pairs.emplace_back(u, out[i]);
    }
  }
  return d;
}

Stat reciprocity_fraction(const ReciprocalDecomposition& d) {
  const std::uint64_t mutual = 2 * d.reciprocal_pairs.size();
  const std::uint64_t total = mutual + d.nonreciprocal_edges.size();
  if (total == 0) return Stat::undefined("reciprocity undefined on an edgeless graph");
  return Stat::of(static_cast<double>(mutual) / static_cast<double>(total));
}

RDegreeStats r_degree_stats(const ReciprocalDecomposition& d, std::optional<std::uint64_t> k_min) {
  RDegreeStats s;
  s.histogram = DegreeHistogram::from_values(DegreeKind::Reciprocal, d.q_r);
  if (s.histogram.total_nodes() > 0) s.summary = summarize(s.histogram);
  try {
    s.fit = k_min ? mle_powerlaw(s.histogram, *k_min) : fit_powerlaw(s.histogram);
  } catch (const Error& e) {
    s.fit_error = e.what();
  }
  return s;
}

CrossedNonReciprocal crossed_one_point_nr(const ReciprocalDecomposition& d) {
  return {crossed_ratio(d.q_in, d.q_out), crossed_ratio(d.q_in, d.q_r), crossed_ratio(d.q_out, d.q_r)};
}

NonReciprocalMeans conditional_means_nr(const ReciprocalDecomposition& d) {
  const std::vector<double> q_out(d.q_out.begin(), d.q_out.end());
  const std::vector<double> q_r(d.q_r.begin(), d.q_r.end());
  const auto mean_out = mean_of(d.q_out, "<q_out>");
  const auto mean_r = mean_of(d.q_r, "<q_r>");
  return {class_profile(DegreeKind::In, "q_out", d.q_in, q_out, {}, mean_out),
          class_profile(DegreeKind::In, "q_r", d.q_in, q_r, {}, mean_r),
          class_profile(DegreeKind::Out, "q_r", d.q_out, q_r, {}, mean_r)};
}

ReciprocalSubgraph reciprocal_subgraph(const ReciprocalDecomposition& d) {
  ReciprocalSubgraph sub;
  sub.graph = UndirectedGraph::from_edges(d.node_count(), d.reciprocal_pairs);
  sub.member_count = static_cast<std::uint64_t>(
      std::count_if(d.q_r.begin(), d.q_r.end(), [](std::uint64_t q) { return q > 0; }));
  return sub;
}

DirectedGraph nonreciprocal_graph(const DirectedGraph& g, const ReciprocalDecomposition& d) {
  std::vector<OriginalId> ids(g.original_ids().begin(), g.original_ids().end());
  return DirectedGraph::from_edges(std::move(ids), d.nonreciprocal_edges);
}

std::string_view token(ReciprocalKnn v) noexcept {
  switch (v) {
    case ReciprocalKnn::InNnOfIn: return "qin_nn_of_qin";
    case ReciprocalKnn::OutNnOfIn: return "qout_nn_of_qin";
    case ReciprocalKnn::InNnOfOut: return "qin_nn_of_qout";
    case ReciprocalKnn::OutNnOfOut: return "qout_nn_of_qout";
  }
  return "?";
}

ReciprocalKappas reciprocal_kappas(const ReciprocalDecomposition& d) {
  return {mixed_kappa(d.q_r, d.q_in, "kappa_r,in"), mixed_kappa(d.q_r, d.q_out, "kappa_r,out")};
}

CorrelationProfile reciprocal_knn(const ReciprocalDecomposition& d, const ReciprocalSubgraph& sub,
                                  ReciprocalKnn variant, unsigned workers) {
  const bool neighbor_in = variant == ReciprocalKnn::InNnOfIn || variant == ReciprocalKnn::InNnOfOut;
  const bool cond_in = variant == ReciprocalKnn::InNnOfIn || variant == ReciprocalKnn::OutNnOfIn;
  const NodeId n = d.node_count();
  const auto& x = cond_in ? d.q_in : d.q_out;
  const auto& q = neighbor_in ? d.q_in : d.q_out;
  std::vector<double> y(n, 0.0);
  std::vector<char> include(n, 0);
  parallel_chunks(n, workers, [&](unsigned, std::size_t begin, std::size_t end) {
    for (auto i = static_cast<NodeId>(begin); i < end; ++i) {
      auto nb = sub.graph.neighbors(i);
      if (nb.empty()) continue;
      include[i] = 1;
      std::uint64_t s = 0;
      for (NodeId j : nb) s += q[j];
      y[i] = static_cast<double>(s) / static_cast<double>(nb.size());
    }
  });
  const auto kappas = reciprocal_kappas(d);
  return class_profile(cond_in ? DegreeKind::In : DegreeKind::Out,
                       neighbor_in ? "q_in of reciprocal neighbors" : "q_out of reciprocal neighbors", x, y,
                       include, neighbor_in ? kappas.r_in : kappas.r_out);
}

CorrelationProfile reciprocal_knn(const DirectedGraph& g, const ReciprocalDecomposition& d, ReciprocalKnn variant,
                                  unsigned workers) {
  if (g.node_count() != d.node_count()) throw BoundsError("decomposition does not match graph");
  return reciprocal_knn(d, reciprocal_subgraph(d), variant, workers);
}

Stat clustering(const ReciprocalSubgraph& sub, NodeId node) {
  if (node >= sub.graph.node_count()) throw BoundsError("node id out of range");
  const std::uint64_t q = sub.graph.degree(node);
  if (q < 2) return Stat::undefined("clustering needs q_r >= 2, node has q_r = " + std::to_string(q));
  std::vector<std::uint32_t> stamp(sub.graph.node_count(), 0);
  const auto links = links_among_neighbors(sub.graph, node, stamp, 1);
  return Stat::of(2.0 * static_cast<double>(links) / (static_cast<double>(q) * static_cast<double>(q - 1)));
}

std::vector<double> clustering_coefficients(const ReciprocalSubgraph& sub, unsigned workers) {
  const NodeId n = sub.graph.node_count();
  std::vector<double> c(n, kNaN);
  const unsigned threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(chunk_count(n))));
  std::vector<std::vector<std::uint32_t>> stamps(threads);
  parallel_chunks(n, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    auto& stamp = stamps[w];
    if (stamp.empty()) stamp.assign(n, 0);
    for (auto j = static_cast<NodeId>(begin); j < end; ++j) {
      const std::uint64_t q = sub.graph.degree(j);
      if (q < 2) continue;
      const auto links = links_among_neighbors(sub.graph, j, stamp, j + 1);
      c[j] = 2.0 * static_cast<double>(links) / (static_cast<double>(q) * static_cast<double>(q - 1));
    }
  });
  return c;
}

CorrelationProfile avg_clustering_by_degree(const ReciprocalSubgraph& sub, unsigned workers) {
  const NodeId n = sub.graph.node_count();
  const auto c = clustering_coefficients(sub, workers);
  std::vector<std::uint64_t> x(n);
  std::vector<double> y(n, 0.0);
  std::vector<char> include(n, 0);
  for (NodeId j = 0; j < n; ++j) {
    x[j] = sub.graph.degree(j);
    if (x[j] >= 2) {
      include[j] = 1;
      y[j] = c[j];
    }
  }
  return class_profile(DegreeKind::Reciprocal, "clustering", x, y, include, Stat::of(1.0));
}

CorrelationProfile reciprocal_subgraph_knn(const ReciprocalSubgraph& sub, unsigned workers) {
  auto p = knn_undirected(sub.graph, workers);
  p.x_kind = DegreeKind::Reciprocal;
  p.quantity = "q_r,nn";
  return p;
}

std::vector<ScatterPoint> reciprocal_scatter(const ReciprocalSubgraph& sub, unsigned workers) {
  const auto c = clustering_coefficients(sub, workers);
  std::vector<ScatterPoint> pts;
  pts.reserve(sub.member_count);
  for (NodeId j = 0; j < sub.graph.node_count(); ++j) {
    const auto q = sub.graph.degree(j);
    if (q == 0) continue;
    std::uint64_t s = 0;
    for (NodeId u : sub.graph.neighbors(j)) s += sub.graph.degree(u);
    pts.push_back({j, q, static_cast<double>(s) / static_cast<double>(q), c[j]});
  }
  return pts;
}

}  // namespace webgraph
