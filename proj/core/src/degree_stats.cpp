#include "webgraph/degree_stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "webgraph/parallel.hpp"
#include "webgraph/zeta.hpp"

namespace webgraph {

namespace {

__extension__ typedef unsigned __int128 u128;

double to_double(u128 x) { return static_cast<double>(x); }

std::uint64_t sorted_intersection_size(std::span<const NodeId> a, std::span<const NodeId> b) {
  std::uint64_t n = 0;
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

std::span<const DegreeHistogram::Bin> bins_in_range(const DegreeHistogram& h, std::uint64_t k_min,
                                                    std::optional<std::uint64_t> k_max) {
  auto bins = h.bins();
  auto first = std::lower_bound(bins.begin(), bins.end(), k_min,
                                [](const DegreeHistogram::Bin& b, std::uint64_t k) { return b.degree < k; });
  auto last = k_max ? std::upper_bound(first, bins.end(), *k_max,
                                       [](std::uint64_t k, const DegreeHistogram::Bin& b) { return k < b.degree; })
                    : bins.end();
  return {first, last};
}

// Unnormalized survival mass of a power law on [k_min, k_max] evaluated at
// arbitrary k, with a dense table for small k.
class PowerLawTail {
 public:
  PowerLawTail(double gamma, std::uint64_t k_min, std::optional<std::uint64_t> k_max)
      : gamma_(gamma), k_min_(k_min), k_max_(k_max) {
    constexpr std::uint64_t kDense = 1024;
    const std::uint64_t top = k_max ? std::min(*k_max + 1, kDense) : kDense;
    if (top > k_min_) {
      dense_.resize(top - k_min_ + 1);
      double acc = far(top);
      dense_.back() = acc;
      for (std::uint64_t k = top; k-- > k_min_;) {
        acc += std::pow(static_cast<double>(k), -gamma_);
        dense_[k - k_min_] = acc;
      }
    }
    norm_ = mass(k_min_);
  }

  /// P(K >= k) under the model.
  double survival(std::uint64_t k) const { return k <= k_min_ ? 1.0 : mass(k) / norm_; }

 private:
  double mass(std::uint64_t k) const {
    if (k_max_ && k > *k_max_) return 0.0;
    if (k - k_min_ < dense_.size()) return dense_[k - k_min_];
    return far(k);
  }
  double far(std::uint64_t k) const {
    if (k_max_ && k > *k_max_) return 0.0;
    return zeta_range_sums(gamma_, k, k_max_).s0;
  }

  double gamma_;
  std::uint64_t k_min_;
  std::optional<std::uint64_t> k_max_;
  std::vector<double> dense_;
  double norm_ = 1.0;
};

}  // namespace

std::string_view token(DegreeKind k) noexcept {
  switch (k) {
    case DegreeKind::In: return "in";
    case DegreeKind::Out: return "out";
    case DegreeKind::Reciprocal: return "reciprocal";
    case DegreeKind::Undirected: return "undirected";
  }
  return "?";
}

DegreeHistogram::DegreeHistogram(DegreeKind kind, std::vector<Bin> bins) : kind_(kind) {
  std::sort(bins.begin(), bins.end(), [](const Bin& a, const Bin& b) { return a.degree < b.degree; });
  for (const auto& b : bins) {
    if (b.count == 0) continue;
    if (!bins_.empty() && bins_.back().degree == b.degree) bins_.back().count += b.count;
    else bins_.push_back(b);
    total_ += b.count;
  }
}

DegreeHistogram DegreeHistogram::from_values(DegreeKind kind, std::span<const std::uint64_t> values) {
  std::vector<std::uint64_t> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Bin> bins;
  for (auto v : sorted) {
    if (!bins.empty() && bins.back().degree == v) ++bins.back().count;
    else bins.push_back({v, 1});
  }
  return DegreeHistogram(kind, std::move(bins));
}

std::uint64_t DegreeHistogram::count(std::uint64_t degree) const noexcept {
  auto it = std::lower_bound(bins_.begin(), bins_.end(), degree,
                             [](const Bin& b, std::uint64_t k) { return b.degree < k; });
  return it != bins_.end() && it->degree == degree ? it->count : 0;
}

double DegreeHistogram::probability(std::uint64_t degree) const noexcept {
  return total_ == 0 ? 0.0 : static_cast<double>(count(degree)) / static_cast<double>(total_);
}

std::vector<std::uint64_t> degree_sequence(const DirectedGraph& g, DegreeKind kind, unsigned workers) {
  std::vector<std::uint64_t> seq(g.node_count());
  parallel_chunks(g.node_count(), workers, [&](unsigned, std::size_t begin, std::size_t end) {
    for (auto n = static_cast<NodeId>(begin); n < end; ++n) {
      switch (kind) {
        case DegreeKind::In: seq[n] = g.in_degree(n); break;
        case DegreeKind::Out: seq[n] = g.out_degree(n); break;
        case DegreeKind::Reciprocal:
          seq[n] = sorted_intersection_size(g.in_neighbors(n), g.out_neighbors(n));
          break;
        case DegreeKind::Undirected:
          seq[n] = g.in_degree(n) + g.out_degree(n) -
                   sorted_intersection_size(g.in_neighbors(n), g.out_neighbors(n));
          break;
      }
    }
  });
  return seq;
}

DegreeHistogram degree_histogram(const DirectedGraph& g, DegreeKind kind, unsigned workers) {
  const auto seq = degree_sequence(g, kind, workers);
  std::vector<std::uint64_t> dense;
  for (auto k : seq) {
    if (k >= dense.size()) dense.resize(k + 1, 0);
    ++dense[k];
  }
  std::vector<DegreeHistogram::Bin> bins;
  for (std::uint64_t k = 0; k < dense.size(); ++k)
    if (dense[k]) bins.push_back({k, dense[k]});
  return DegreeHistogram(kind, std::move(bins));
}

CumulativeDistribution::CumulativeDistribution(const DegreeHistogram& h) : total_(h.total_nodes()) {
  auto bins = h.bins();
  points_.resize(bins.size());
  std::uint64_t tail = 0;
  for (std::size_t i = bins.size(); i-- > 0;) {
    tail += bins[i].count;
    points_[i] = {bins[i].degree, tail,
                  static_cast<double>(tail) / static_cast<double>(total_)};
  }
}

std::uint64_t CumulativeDistribution::tail_count(std::uint64_t k) const noexcept {
  auto it = std::lower_bound(points_.begin(), points_.end(), k,
                             [](const Point& p, std::uint64_t x) { return p.degree < x; });
  return it == points_.end() ? 0 : it->tail_count;
}

double CumulativeDistribution::at(std::uint64_t k) const noexcept {
  return total_ == 0 ? 0.0 : static_cast<double>(tail_count(k)) / static_cast<double>(total_);
}

CumulativeDistribution cumulative(const DegreeHistogram& h) { return CumulativeDistribution(h); }

DegreeSummary summarize(const DegreeHistogram& h) {
  if (h.total_nodes() == 0) {
    DegreeSummary empty;
    empty.mean = empty.sigma = empty.second_moment = std::numeric_limits<double>::quiet_NaN();
    empty.kappa = Stat::undefined("empty histogram");
    return empty;
  }
  u128 sum = 0, sum_sq = 0;
  for (const auto& b : h.bins()) {
    sum += u128(b.degree) * b.count;
    sum_sq += u128(b.degree) * b.degree * b.count;
  }
  const u128 n = h.total_nodes();
  DegreeSummary s;
  s.nodes = h.total_nodes();
  s.max = h.max_degree();
  s.mean = to_double(sum) / to_double(n);
  s.second_moment = to_double(sum_sq) / to_double(n);
  // N sum k^2 >= (sum k)^2 by Cauchy-Schwarz; the difference is exact while it fits.
  const long double nn = static_cast<long double>(n);
  long double var;
  if (sum_sq <= std::numeric_limits<u128>::max() / n) {
    var = static_cast<long double>(n * sum_sq - sum * sum) / (nn * nn);
  } else {
    var = static_cast<long double>(sum_sq) / nn - (static_cast<long double>(sum) / nn) * (static_cast<long double>(sum) / nn);
    var = std::max<long double>(var, 0.0L);
  }
  s.sigma = static_cast<double>(std::sqrt(var));
  if (sum == 0) s.kappa = Stat::undefined("kappa = <k^2>/<k> needs at least one nonzero degree");
  else s.kappa = Stat::of(to_double(sum_sq) / to_double(sum));
  return s;
}

Stat crossed_heterogeneity(const DirectedGraph& g) {
  u128 cross = 0, in = 0;
  for (NodeId n = 0; n < g.node_count(); ++n) {
    cross += u128(g.in_degree(n)) * g.out_degree(n);
    in += g.in_degree(n);
  }
  if (in == 0) return Stat::undefined("kappa_in,out needs at least one edge");
  return Stat::of(to_double(cross) / to_double(in));
}

double ks_distance(const DegreeHistogram& h, double gamma, std::uint64_t k_min,
                   std::optional<std::uint64_t> k_max) {
  auto tail = bins_in_range(h, k_min, k_max);
  std::uint64_t n = 0;
  for (const auto& b : tail) n += b.count;
  if (n == 0) return 1.0;
  const PowerLawTail model(gamma, k_min, k_max);
  auto model_cdf = [&](std::uint64_t k) { return 1.0 - model.survival(k + 1); };

  double d = 0.0;
  double emp = 0.0;
  std::uint64_t acc = 0;
  std::uint64_t prev_end = k_min;  // first integer not yet covered
  for (const auto& b : tail) {
    // Integers [prev_end, b.degree - 1] sit at the previous empirical level.
    if (b.degree > prev_end) d = std::max(d, std::abs(emp - model_cdf(b.degree - 1)));
    acc += b.count;
    emp = static_cast<double>(acc) / static_cast<double>(n);
    d = std::max(d, std::abs(emp - model_cdf(b.degree)));
    prev_end = b.degree + 1;
  }
  return d;
}

PowerLawFit mle_powerlaw(const DegreeHistogram& h, std::uint64_t k_min,
                         std::optional<std::uint64_t> k_max_fit) {
  if (k_min == 0) throw FitError("k_min must be >= 1");
  if (k_max_fit && *k_max_fit < k_min) throw FitError("k_max_fit below k_min");
  auto tail = bins_in_range(h, k_min, k_max_fit);
  if (tail.size() < kMinDistinctInRange)
    throw FitError("only " + std::to_string(tail.size()) + " distinct degree values in [" +
                   std::to_string(k_min) + "," +
                   (k_max_fit ? std::to_string(*k_max_fit) : std::string("inf")) + "], need " +
                   std::to_string(kMinDistinctInRange));

  std::uint64_t n = 0;
  double sum_log = 0.0;
  for (const auto& b : tail) {
    n += b.count;
    sum_log += static_cast<double>(b.count) * std::log(static_cast<double>(b.degree));
  }
  const double mean_log = sum_log / static_cast<double>(n);

  auto sums = [&](double s) {
    auto r = zeta_range_sums(s, k_min, k_max_fit);
    if (!(r.s0 > 0.0) || !std::isfinite(r.s0) || !std::isfinite(r.s1))
      throw NumericError("zeta normalization not representable at gamma=" + std::to_string(s));
    return r;
  };
  // E_gamma[ln k] is strictly decreasing in gamma; the MLE equates it to the sample mean.
  auto expected_log = [&](double s) {
    auto r = sums(s);
    return r.s1 / r.s0;
  };

  double lo = 1.0 + 1e-9;
  if (expected_log(lo) <= mean_log)
    throw FitError("maximum likelihood exponent is at or below 1 (sample mean log-degree " +
                   std::to_string(mean_log) + ")");
  double hi = 2.0;
  constexpr double kMaxGamma = 50.0;
  while (expected_log(hi) > mean_log) {
    lo = hi;
    hi *= 2.0;
    if (hi > kMaxGamma)
      throw NumericError("score has no root below gamma=" + std::to_string(kMaxGamma) +
                         "; bracket [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
  }

  PowerLawFit fit;
  constexpr int kMaxIterations = 200;
  constexpr double kTolerance = 1e-10;
  int it = 0;
  while (hi - lo > kTolerance) {
    if (++it > kMaxIterations)
      throw NumericError("bisection did not converge: bracket [" + std::to_string(lo) + "," +
                         std::to_string(hi) + "] after " + std::to_string(kMaxIterations) +
                         " iterations");
    const double mid = 0.5 * (lo + hi);
    if (expected_log(mid) > mean_log) lo = mid;
    else hi = mid;
  }
  fit.gamma = 0.5 * (lo + hi);
  fit.iterations = it;

  const auto r = sums(fit.gamma);
  const double var_log = r.s2 / r.s0 - (r.s1 / r.s0) * (r.s1 / r.s0);
  if (!(var_log > 0.0)) throw NumericError("non-positive Fisher information at the estimate");
  fit.stderr = 1.0 / std::sqrt(static_cast<double>(n) * var_log);
  fit.log_likelihood = -fit.gamma * sum_log - static_cast<double>(n) * std::log(r.s0);
  fit.k_min = k_min;
  fit.k_max_fit = k_max_fit ? *k_max_fit : tail.back().degree;
  fit.truncated = k_max_fit.has_value();
  fit.n_tail = n;
  fit.ks = ks_distance(h, fit.gamma, k_min, k_max_fit);
  fit.powerlaw_plausible = fit.ks <= kPlausibleKs;
  return fit;
}

FitRange select_fit_range(const DegreeHistogram& h) {
  auto positive = bins_in_range(h, 1, std::nullopt);
  if (positive.size() < kMinDistinctInRange)
    throw FitError("need at least " + std::to_string(kMinDistinctInRange) +
                   " distinct positive degrees to select a fit range, have " +
                   std::to_string(positive.size()));
  const std::uint64_t k_max = positive.back().degree;

  FitRange best{positive.front().degree, k_max};
  double best_ks = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + kMinDistinctInRange <= positive.size(); ++i) {
    const std::uint64_t k_min = positive[i].degree;
    if (k_max < 10 * k_min) break;
    double ks;
    try {
      ks = mle_powerlaw(h, k_min).ks;
    } catch (const Error&) {
      continue;
    }
    if (ks < best_ks) {
      best_ks = ks;
      best.k_min = k_min;
    }
  }
  return best;
}

PowerLawFit fit_powerlaw(const DegreeHistogram& h) {
  const auto range = select_fit_range(h);
  return mle_powerlaw(h, range.k_min);
}

std::vector<LogBin> log_binned(const DegreeHistogram& h, unsigned bins_per_decade) {
  std::vector<LogBin> out;
  if (bins_per_decade == 0 || h.total_nodes() == 0 || h.max_degree() == 0) return out;
  auto positive = bins_in_range(h, 1, std::nullopt);
  const double total = static_cast<double>(h.total_nodes());
  std::size_t cursor = 0;
  for (unsigned i = 0;; ++i) {
    const double lower = std::pow(10.0, static_cast<double>(i) / bins_per_decade);
    const double upper = std::pow(10.0, static_cast<double>(i + 1) / bins_per_decade);
    const auto first_int = static_cast<std::uint64_t>(std::ceil(lower));
    const auto end_int = static_cast<std::uint64_t>(std::ceil(upper));
    if (first_int > h.max_degree()) break;
    if (end_int <= first_int) continue;
    LogBin bin{lower, upper, std::sqrt(lower * upper), 0, 0.0};
    while (cursor < positive.size() && positive[cursor].degree < end_int) bin.count += positive[cursor++].count;
    bin.density = static_cast<double>(bin.count) / total / static_cast<double>(end_int - first_int);
    if (bin.count > 0) out.push_back(bin);
  }
  return out;
}

}  // namespace webgraph
