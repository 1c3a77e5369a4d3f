#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "webgraph/errors.hpp"
#include "webgraph/graph.hpp"

namespace webgraph {

enum class DegreeKind : std::uint8_t { In, Out, Reciprocal, Undirected };

std::string_view token(DegreeKind k) noexcept;

/// Exact per-degree node counts (no binning). Bins are sorted by degree and
/// only hold nonzero counts.
class DegreeHistogram {
 public:
  struct Bin {
    std::uint64_t degree = 0;
    std::uint64_t count = 0;
    friend bool operator==(const Bin&, const Bin&) = default;
  };

  DegreeHistogram() = default;
  /// Bins may be unsorted and repeat degrees; they are merged.
  DegreeHistogram(DegreeKind kind, std::vector<Bin> bins);

  static DegreeHistogram from_values(DegreeKind kind, std::span<const std::uint64_t> values);

  DegreeKind kind() const noexcept { return kind_; }
  std::span<const Bin> bins() const noexcept { return bins_; }
  std::uint64_t total_nodes() const noexcept { return total_; }
  std::size_t distinct() const noexcept { return bins_.size(); }
  std::uint64_t count(std::uint64_t degree) const noexcept;
  double probability(std::uint64_t degree) const noexcept;
  std::uint64_t min_degree() const noexcept { return bins_.empty() ? 0 : bins_.front().degree; }
  std::uint64_t max_degree() const noexcept { return bins_.empty() ? 0 : bins_.back().degree; }

  friend bool operator==(const DegreeHistogram&, const DegreeHistogram&) = default;

 private:
  DegreeKind kind_ = DegreeKind::In;
  std::vector<Bin> bins_;
  std::uint64_t total_ = 0;
};

/// Per-node degree in the given direction. Reciprocal counts mutual
/// neighbors; Undirected counts distinct neighbors ignoring direction.
std::vector<std::uint64_t> degree_sequence(const DirectedGraph& g, DegreeKind kind, unsigned workers = 1);

DegreeHistogram degree_histogram(const DirectedGraph& g, DegreeKind kind, unsigned workers = 1);

/// P_c(k) = sum_{k' >= k} P(k'), backed by exact integer tail counts.
class CumulativeDistribution {
 public:
  struct Point {
    std::uint64_t degree;
    std::uint64_t tail_count;  ///< nodes with degree >= this degree
    double pc;
  };

  explicit CumulativeDistribution(const DegreeHistogram& h);

  std::uint64_t tail_count(std::uint64_t k) const noexcept;
  double at(std::uint64_t k) const noexcept;
  /// One point per distinct degree present in the histogram.
  std::span<const Point> points() const noexcept { return points_; }
  std::uint64_t total_nodes() const noexcept { return total_; }

 private:
  std::vector<Point> points_;
  std::uint64_t total_ = 0;
};

CumulativeDistribution cumulative(const DegreeHistogram& h);

struct DegreeSummary {
  std::uint64_t nodes = 0;
  double mean = 0.0;
  std::uint64_t max = 0;
  double sigma = 0.0;
  double second_moment = 0.0;
  /// <k^2>/<k>; undefined when every degree is zero.
  Stat kappa;
};

/// Whole-population moments including k = 0 nodes. Sums are exact integers;
/// sigma^2 = (N sum k^2 - (sum k)^2) / N^2 is formed before the one rounding.
/// An empty histogram gives NaN moments and an undefined kappa.
DegreeSummary summarize(const DegreeHistogram& h);

/// <k_in k_out> / <k_in>.
Stat crossed_heterogeneity(const DirectedGraph& g);

struct PowerLawFit {
  double gamma = 0.0;
  double stderr = 0.0;
  std::uint64_t k_min = 1;
  std::uint64_t k_max_fit = 0;  ///< largest degree in range
  bool truncated = false;       ///< likelihood normalized on [k_min, k_max_fit] instead of [k_min, inf)
  std::uint64_t n_tail = 0;
  double ks = 0.0;
  bool powerlaw_plausible = false;
  double log_likelihood = 0.0;
  int iterations = 0;
};

/// Kolmogorov-Smirnov distance above which a fit is reported as decaying
/// faster than a power law.
inline constexpr double kPlausibleKs = 0.05;
/// Fits need at least this many distinct degree values with mass in range.
inline constexpr std::size_t kMinDistinctInRange = 10;

/// Discrete power-law maximum likelihood fit over samples in
/// [k_min, k_max_fit]. Without k_max_fit the normalization runs to infinity
/// (Hurwitz zeta); with it the likelihood is the truncated zeta on the range.
/// The score equation is solved by bisection to |dgamma| < 1e-10; stderr
/// comes from the observed Fisher information.
PowerLawFit mle_powerlaw(const DegreeHistogram& h, std::uint64_t k_min,
                         std::optional<std::uint64_t> k_max_fit = std::nullopt);

/// KS distance between the empirical distribution of samples in
/// [k_min, k_max] and a discrete power law with the given exponent.
double ks_distance(const DegreeHistogram& h, double gamma, std::uint64_t k_min,
                   std::optional<std::uint64_t> k_max = std::nullopt);

struct FitRange {
  std::uint64_t k_min = 1;
  std::uint64_t k_max_fit = 0;
};

/// Chooses k_min by minimizing the KS distance of the fitted tail. Candidates
/// are observed degrees >= 1 whose tail keeps kMinDistinctInRange distinct
/// values and spans at least a decade (max >= 10 k_min); if no candidate
/// spans a decade the smallest positive degree is used. k_max_fit is the
/// largest observed degree.
FitRange select_fit_range(const DegreeHistogram& h);

/// select_fit_range followed by an untruncated mle_powerlaw at that k_min.
PowerLawFit fit_powerlaw(const DegreeHistogram& h);

struct LogBin {
  double lower = 0.0;   ///< inclusive
  double upper = 0.0;   ///< exclusive
  double center = 0.0;  ///< geometric mean of the bounds
  std::uint64_t count = 0;
  double density = 0.0;  ///< probability mass divided by the number of integers in the bin
};

/// Presentation-only logarithmic binning over degrees >= 1.
std::vector<LogBin> log_binned(const DegreeHistogram& h, unsigned bins_per_decade = 5);

}  // namespace webgraph
