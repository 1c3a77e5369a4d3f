#include "webgraph/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "webgraph/parallel.hpp"

namespace webgraph {

namespace {

__extension__ typedef unsigned __int128 u128;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Stat ratio_of(u128 num, u128 den, const char* what) {
  if (den == 0) return Stat::undefined(std::string(what) + ": zero denominator");
  return Stat::of(static_cast<double>(num) / static_cast<double>(den));
}

}  // namespace

const ProfilePoint* CorrelationProfile::find(std::uint64_t degree) const noexcept {
  auto it = std::lower_bound(points.begin(), points.end(), degree,
                             [](const ProfilePoint& p, std::uint64_t k) { return p.degree < k; });
  return it != points.end() && it->degree == degree ? &*it : nullptr;
}

std::uint64_t CorrelationProfile::population() const noexcept {
  std::uint64_t n = 0;
  for (const auto& p : points) n += p.population;
  return n;
}

CorrelationProfile class_profile(DegreeKind x_kind, std::string quantity,
                                 std::span<const std::uint64_t> x, std::span<const double> y,
                                 std::span<const char> include, Stat normalization) {
  if (x.size() != y.size() || (!include.empty() && include.size() != x.size()))
    throw BoundsError("class_profile: per-node arrays differ in length");
  CorrelationProfile p;
  p.x_kind = x_kind;
  p.quantity = std::move(quantity);
  p.normalization = normalization;

  std::uint64_t max_x = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (include.empty() || include[i]) max_x = std::max(max_x, x[i]);

  // Node-order accumulation keeps the floating-point result independent of threading.
  std::vector<double> sum(max_x + 1, 0.0);
  std::vector<std::uint64_t> count(max_x + 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!include.empty() && !include[i]) continue;
    sum[x[i]] += y[i];
    ++count[x[i]];
  }
  std::vector<double> mean(max_x + 1, 0.0), sq(max_x + 1, 0.0);
  for (std::uint64_t k = 0; k <= max_x; ++k)
    if (count[k]) mean[k] = sum[k] / static_cast<double>(count[k]);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!include.empty() && !include[i]) continue;
    const double d = y[i] - mean[x[i]];
    sq[x[i]] += d * d;
  }

  const bool can_normalize = normalization.defined() && normalization.value() != 0.0;
  const double norm = can_normalize ? normalization.value() : kNaN;
  for (std::uint64_t k = 0; k <= max_x; ++k) {
    if (!count[k]) continue;
    ProfilePoint pt;
    pt.degree = k;
    pt.population = count[k];
    pt.mean_raw = mean[k];
    pt.stderr_raw = count[k] > 1
                        ? std::sqrt(sq[k] / static_cast<double>(count[k] - 1)) /
                              std::sqrt(static_cast<double>(count[k]))
                        : kNaN;
    pt.mean_normalized = mean[k] / norm;
    pt.stderr_normalized = pt.stderr_raw / norm;
    p.points.push_back(pt);
  }
  if (normalization.defined() && normalization.value() == 0.0)
    p.normalization = Stat::undefined("normalization is zero");
  return p;
}

RatioEstimate crossed_ratio(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y) {
  if (x.size() != y.size()) throw BoundsError("crossed_ratio: arrays differ in length");
  RatioEstimate r;
  const std::size_t n = x.size();
  u128 sx = 0, sy = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxy += u128(x[i]) * y[i];
  }
  if (n == 0 || sx == 0 || sy == 0) {
    r.value = Stat::undefined("crossed ratio undefined: a mean in the denominator is zero");
    r.stderr = kNaN;
    return r;
  }
  const double dn = static_cast<double>(n);
  const double b = static_cast<double>(sx) / dn;
  const double c = static_cast<double>(sy) / dn;
  const double ratio = (static_cast<double>(sxy) / static_cast<double>(sx)) * (dn / static_cast<double>(sy));
  r.value = Stat::of(ratio);
  // Influence function of A/(BC): psi_i = x_i y_i/(BC) - R x_i/B - R y_i/C + R.
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = static_cast<double>(x[i]), yi = static_cast<double>(y[i]);
    const double psi = xi * yi / (b * c) - ratio * xi / b - ratio * yi / c + ratio;
    ss += psi * psi;
  }
  r.stderr = n > 1 ? std::sqrt(ss / (dn - 1.0)) / std::sqrt(dn) : kNaN;
  return r;
}

DirectedKappas directed_kappas(const DirectedGraph& g) {
  u128 in = 0, out = 0, in2 = 0, out2 = 0, cross = 0;
  for (NodeId n = 0; n < g.node_count(); ++n) {
    const u128 ki = g.in_degree(n), ko = g.out_degree(n);
    in += ki;
    out += ko;
    in2 += ki * ki;
    out2 += ko * ko;
    cross += ki * ko;
  }
  return {ratio_of(in2, in, "kappa_in"), ratio_of(out2, out, "kappa_out"), ratio_of(cross, in, "kappa_in,out")};
}

CorrelationProfile avg_out_given_in(const DirectedGraph& g, unsigned workers) {
  const auto x = degree_sequence(g, DegreeKind::In, workers);
  const auto k_out = degree_sequence(g, DegreeKind::Out, workers);
  std::vector<double> y(k_out.begin(), k_out.end());
  u128 total = 0;
  for (auto k : k_out) total += k;
  Stat norm = g.node_count() == 0 ? Stat::undefined("empty graph")
                                  : ratio_of(total, g.node_count(), "<k_out>");
  return class_profile(DegreeKind::In, "k_out", x, y, {}, norm);
}

RatioEstimate crossed_one_point(const DirectedGraph& g) {
  return crossed_ratio(degree_sequence(g, DegreeKind::In), degree_sequence(g, DegreeKind::Out));
}

CorrelationProfile knn_undirected(const UndirectedGraph& g, unsigned workers) {
  const NodeId n = g.node_count();
  std::vector<std::uint64_t> x(n);
  std::vector<double> y(n, 0.0);
  std::vector<char> include(n, 0);
  parallel_chunks(n, workers, [&](unsigned, std::size_t begin, std::size_t end) {
    for (auto i = static_cast<NodeId>(begin); i < end; ++i) {
      x[i] = g.degree(i);
      if (x[i] == 0) continue;
      include[i] = 1;
      std::uint64_t s = 0;
      for (NodeId j : g.neighbors(i)) s += g.degree(j);
      y[i] = static_cast<double>(s) / static_cast<double>(x[i]);
    }
  });
  u128 k1 = 0, k2 = 0;
  for (auto k : x) {
    k1 += k;
    k2 += u128(k) * k;
  }
  return class_profile(DegreeKind::Undirected, "k_nn", x, y, include, ratio_of(k2, k1, "kappa"));
}

std::string_view token(DirectedKnn v) noexcept {
  switch (v) {
    case DirectedKnn::InNnOfIn: return "in_nn_of_in";
    case DirectedKnn::OutNnOfIn: return "out_nn_of_in";
    case DirectedKnn::InNnOfOut: return "in_nn_of_out";
    case DirectedKnn::OutNnOfOut: return "out_nn_of_out";
  }
  return "?";
}

CorrelationProfile directed_knn(const DirectedGraph& g, DirectedKnn variant, unsigned workers) {
  const bool by_in = variant == DirectedKnn::InNnOfIn || variant == DirectedKnn::OutNnOfIn;
  const bool neighbor_in = variant == DirectedKnn::InNnOfIn || variant == DirectedKnn::InNnOfOut;
  const NodeId n = g.node_count();
  std::vector<std::uint64_t> x(n);
  std::vector<double> y(n, 0.0);
  std::vector<char> include(n, 0);
  parallel_chunks(n, workers, [&](unsigned, std::size_t begin, std::size_t end) {
    for (auto i = static_cast<NodeId>(begin); i < end; ++i) {
      const auto nb = by_in ? g.in_neighbors(i) : g.out_neighbors(i);
      x[i] = nb.size();
      if (nb.empty()) continue;
      include[i] = 1;
      std::uint64_t s = 0;
      for (NodeId j : nb) s += neighbor_in ? g.in_degree(j) : g.out_degree(j);
      y[i] = static_cast<double>(s) / static_cast<double>(nb.size());
    }
  });
  const auto kappas = directed_kappas(g);
  Stat norm;
  std::string quantity;
  switch (variant) {
    case DirectedKnn::InNnOfIn: norm = kappas.in_out; quantity = "k_in of in-neighbors"; break;
    case DirectedKnn::OutNnOfIn: norm = kappas.out; quantity = "k_out of in-neighbors"; break;
    case DirectedKnn::InNnOfOut: norm = kappas.in; quantity = "k_in of out-neighbors"; break;
    case DirectedKnn::OutNnOfOut: norm = kappas.in_out; quantity = "k_out of out-neighbors"; break;
  }
  return class_profile(by_in ? DegreeKind::In : DegreeKind::Out, std::move(quantity), x, y, include, norm);
}

std::vector<LogBinnedPoint> log_binned(const CorrelationProfile& p, unsigned bins_per_decade) {
  std::vector<LogBinnedPoint> out;
  if (bins_per_decade == 0) return out;
  std::size_t cursor = 0;
  if (!p.points.empty() && p.points.front().degree == 0) {
    const auto& z = p.points.front();
    out.push_back({0.0, 1.0, 0.0, z.mean_raw, z.mean_normalized, z.population});
    cursor = 1;
  }
  for (unsigned i = 0; cursor < p.points.size(); ++i) {
    const double lower = std::pow(10.0, static_cast<double>(i) / bins_per_decade);
    const double upper = std::pow(10.0, static_cast<double>(i + 1) / bins_per_decade);
    LogBinnedPoint b{lower, upper, std::sqrt(lower * upper), 0.0, 0.0, 0};
    double raw = 0.0, normalized = 0.0;
    while (cursor < p.points.size() && static_cast<double>(p.points[cursor].degree) < upper) {
      const auto& pt = p.points[cursor++];
      raw += pt.mean_raw * static_cast<double>(pt.population);
      normalized += pt.mean_normalized * static_cast<double>(pt.population);
      b.population += pt.population;
    }
    if (b.population == 0) continue;
    b.mean_raw = raw / static_cast<double>(b.population);
    b.mean_normalized = normalized / static_cast<double>(b.population);
    out.push_back(b);
  }
  return out;
}

}  // namespace webgraph
