#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

namespace webgraph {

/// Sums over the discrete power-law support starting at `a`:
///   s0 = sum_{k>=a} k^-s,  s1 = sum ln(k) k^-s,  s2 = sum ln(k)^2 k^-s.
/// s0 is the Hurwitz zeta function at integer offset. Requires s > 1, a >= 1.
struct ZetaSums {
  double s0 = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
};

ZetaSums zeta_tail_sums(double s, std::uint64_t a);

/// Same sums over the finite range [a, b]; valid for any real s when b is finite.
ZetaSums zeta_range_sums(double s, std::uint64_t a, std::optional<std::uint64_t> b);

double hurwitz_zeta(double s, std::uint64_t a);

/// Discrete power law P(k) proportional to k^-gamma on [k_min, k_max]
/// (k_max unbounded when absent). Sampling inverts the survival function,
/// tabulated near k_min and bisected on exact tail sums beyond.
class ZetaDistribution {
 public:
  ZetaDistribution(double gamma, std::uint64_t k_min = 1,
                   std::optional<std::uint64_t> k_max = std::nullopt);

  double gamma() const noexcept { return gamma_; }
  std::uint64_t k_min() const noexcept { return k_min_; }
  std::optional<std::uint64_t> k_max() const noexcept { return k_max_; }

  double pmf(std::uint64_t k) const;
  /// P(K >= k).
  double survival(std::uint64_t k) const;
  double mean() const;

  std::uint64_t operator()(std::mt19937_64& rng) const;

 private:
  double tail_mass(std::uint64_t k) const;  // unnormalized sum over [k, k_max]

  double gamma_;
  std::uint64_t k_min_;
  std::optional<std::uint64_t> k_max_;
  double norm_ = 0.0;
  std::vector<double> table_;  // survival(k_min + i)
};

/// Uniform double in (0, 1] from the top 53 bits of one draw.
inline double uniform_open_closed(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

}  // namespace webgraph
