#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "oracles/naive_correlations.hpp"
#include "webgraph/correlations.hpp"
#include "webgraph/graph.hpp"

namespace testing_support {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(WEBGRAPH_TEST_DATA_DIR) / name;
}

inline webgraph::DirectedGraph graph_of(webgraph::NodeId n, std::vector<webgraph::Edge> edges) {
  return webgraph::DirectedGraph::from_edges(n, std::move(edges));
}

inline webgraph::DirectedGraph cycle(webgraph::NodeId n) {
  std::vector<webgraph::Edge> e;
  for (webgraph::NodeId i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return graph_of(n, e);
}

// G(n, p) digraph without loops
inline std::vector<webgraph::Edge> random_edges(webgraph::NodeId n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<webgraph::Edge> e;
  for (webgraph::NodeId u = 0; u < n; ++u)
    for (webgraph::NodeId v = 0; v < n; ++v)
      if (u != v && coin(rng)) e.emplace_back(u, v);
  return e;
}

// G(n, p) plus each edge's reverse with probability `mutual`
inline std::vector<webgraph::Edge> random_edges_reciprocal(webgraph::NodeId n, double p, double mutual,
                                                           std::uint64_t seed) {
  auto e = random_edges(n, p, seed);
  std::mt19937_64 rng(seed ^ 0x5bd1e995u);
  std::bernoulli_distribution coin(mutual);
  const auto base = e.size();
  for (std::size_t i = 0; i < base; ++i)
    if (coin(rng)) e.emplace_back(e[i].second, e[i].first);
  return e;
}

inline oracle::EdgeList to_oracle(const webgraph::DirectedGraph& g) {
  oracle::EdgeList out;
  for (auto [u, v] : g.edges()) out.emplace_back(u, v);
  return out;
}

inline bool close(double a, double b, double rel) {
  if (std::isnan(a) || std::isnan(b)) return std::isnan(a) && std::isnan(b);
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

// Empty string when the library profile equals the oracle to `rel`, else a
// description of the first mismatch.
inline std::string compare_profile(const webgraph::CorrelationProfile& got, const oracle::Profile& want,
                                   double rel = 1e-12, bool check_norm = true) {
  if (got.points.size() != want.classes.size())
    return "class count " + std::to_string(got.points.size()) + " vs " + std::to_string(want.classes.size());
  // a zero divisor is reported as an undefined normalization
  const double want_norm = want.norm == 0.0 ? NAN : want.norm;
  if (check_norm && !close(got.normalization.value_or(NAN), want_norm, rel))
    return "normalization " + std::to_string(got.normalization.value_or(NAN)) + " vs " + std::to_string(want.norm);
  for (const auto& pt : got.points) {
    auto it = want.classes.find(pt.degree);
    if (it == want.classes.end()) return "unexpected class " + std::to_string(pt.degree);
    const auto& c = it->second;
    if (pt.population != c.count) return "population at k=" + std::to_string(pt.degree);
    if (!close(pt.mean_raw, c.mean, rel)) return "mean at k=" + std::to_string(pt.degree);
    if (!close(pt.stderr_raw, c.stderr_, 1e-9)) return "stderr at k=" + std::to_string(pt.degree);
    if (check_norm) {
      const double norm = want.norm;
      const double expect = (std::isnan(norm) || norm == 0.0) ? NAN : c.mean / norm;
      if (!close(pt.mean_normalized, expect, rel)) return "normalized mean at k=" + std::to_string(pt.degree);
    }
  }
  return {};
}

}  // namespace testing_support
