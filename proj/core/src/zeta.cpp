#include "webgraph/zeta.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "webgraph/errors.hpp"

namespace webgraph {

namespace {

// Terms below this index are summed directly; the remainder uses
// Euler-Maclaurin, whose first neglected correction is O(kSplit^(-s-3)).
constexpr std::uint64_t kSplit = 1024;

const std::array<double, kSplit>& log_table() {
  static const auto table = [] {
    std::array<double, kSplit> t{};
    for (std::uint64_t k = 1; k < kSplit; ++k) t[k] = std::log(static_cast<double>(k));
    return t;
  }();
  return table;
}

ZetaSums euler_maclaurin_tail(double s, double a) {
  const double L = std::log(a);
  const double d = s - 1.0;
  const double base = std::pow(a, -s);  // f0(a)
  const double ia = base * a / d;       // a^(1-s)/(s-1)

  ZetaSums r;
  r.s0 = ia + base / 2.0;
  r.s1 = ia * (L + 1.0 / d) + L * base / 2.0;
  r.s2 = ia * (L * L + 2.0 * L / d + 2.0 / (d * d)) + L * L * base / 2.0;

  // -(B2/2!) f'(a) with f_m(x) = ln(x)^m x^-s, f_m' = x^(-s-1) (m ln^(m-1) - s ln^m).
  const double b1 = base / a;
  r.s0 -= (1.0 / 12.0) * (-s * b1);
  r.s1 -= (1.0 / 12.0) * (b1 * (1.0 - s * L));
  r.s2 -= (1.0 / 12.0) * (b1 * (2.0 * L - s * L * L));
  // -(B4/4!) f0'''(a) = (1/720) * (-s(s+1)(s+2) a^(-s-3)).
  r.s0 += (1.0 / 720.0) * (-s * (s + 1.0) * (s + 2.0) * b1 / (a * a));
  return r;
}

}  // namespace

ZetaSums zeta_tail_sums(double s, std::uint64_t a) {
  if (!(s > 1.0)) throw NumericError("zeta tail sum needs s > 1, got " + std::to_string(s));
  if (a == 0) throw NumericError("zeta tail sum needs a >= 1");
  ZetaSums r;
  const auto& logs = log_table();
  for (std::uint64_t k = a; k < kSplit; ++k) {
    const double L = logs[k];
    const double t = std::exp(-s * L);
    r.s0 += t;
    r.s1 += L * t;
    r.s2 += L * L * t;
  }
  const auto tail = euler_maclaurin_tail(s, static_cast<double>(std::max(a, kSplit)));
  r.s0 += tail.s0;
  r.s1 += tail.s1;
  r.s2 += tail.s2;
  return r;
}

ZetaSums zeta_range_sums(double s, std::uint64_t a, std::optional<std::uint64_t> b) {
  if (a == 0) throw NumericError("zeta range sum needs a >= 1");
  if (!b) return zeta_tail_sums(s, a);
  if (*b < a) return {};
  const std::uint64_t len = *b - a + 1;
  if (len <= 4 * kSplit || !(s > 1.0)) {
    if (len > (std::uint64_t{1} << 26) && !(s > 1.0))
      throw NumericError("finite zeta range too long for s <= 1");
    ZetaSums r;
    for (std::uint64_t k = *b + 1; k-- > a;) {  // small terms first
      const double L = std::log(static_cast<double>(k));
      const double t = std::exp(-s * L);
      r.s0 += t;
      r.s1 += L * t;
      r.s2 += L * L * t;
    }
    return r;
  }
  const auto lo = zeta_tail_sums(s, a);
  const auto hi = zeta_tail_sums(s, *b + 1);
  return {lo.s0 - hi.s0, lo.s1 - hi.s1, lo.s2 - hi.s2};
}

double hurwitz_zeta(double s, std::uint64_t a) { return zeta_tail_sums(s, a).s0; }

ZetaDistribution::ZetaDistribution(double gamma, std::uint64_t k_min, std::optional<std::uint64_t> k_max)
    : gamma_(gamma), k_min_(k_min), k_max_(k_max) {
  if (k_min_ == 0) throw ConfigError("zeta law needs k_min >= 1");
  if (k_max_ && *k_max_ < k_min_) throw ConfigError("zeta law cutoff below k_min");
  if (!k_max_ && !(gamma_ > 1.0)) throw ConfigError("unbounded zeta law needs gamma > 1");
  norm_ = tail_mass(k_min_);

  constexpr std::uint64_t kTable = 1 << 14;
  const std::uint64_t last = k_max_ ? std::min(*k_max_, k_min_ + kTable - 1) : k_min_ + kTable - 1;
  table_.resize(last - k_min_ + 2);
  // Accumulate from the top so the tail keeps full relative precision.
  double acc = tail_mass(last + 1);
  table_.back() = acc / norm_;
  for (std::uint64_t k = last + 1; k-- > k_min_;) {
    acc += std::pow(static_cast<double>(k), -gamma_);
    table_[k - k_min_] = acc / norm_;
  }
  table_.front() = 1.0;
}

double ZetaDistribution::tail_mass(std::uint64_t k) const {
  if (k_max_ && k > *k_max_) return 0.0;
  return zeta_range_sums(gamma_, k, k_max_).s0;
}

double ZetaDistribution::pmf(std::uint64_t k) const {
  if (k < k_min_ || (k_max_ && k > *k_max_)) return 0.0;
  return std::pow(static_cast<double>(k), -gamma_) / norm_;
}

double ZetaDistribution::survival(std::uint64_t k) const {
  if (k <= k_min_) return 1.0;
  if (k - k_min_ < table_.size()) return table_[k - k_min_];
  return tail_mass(k) / norm_;
}

double ZetaDistribution::mean() const {
  if (!k_max_ && !(gamma_ > 2.0)) return std::numeric_limits<double>::infinity();
  return zeta_range_sums(gamma_ - 1.0, k_min_, k_max_).s0 / norm_;
}

std::uint64_t ZetaDistribution::operator()(std::mt19937_64& rng) const {
  // Smallest k with survival(k + 1) < v, v uniform on (0, 1].
  const double v = uniform_open_closed(rng);
  if (table_.back() < v) {
    // table_ is non-increasing; find first index i >= 1 with table_[i] < v.
    auto it = std::lower_bound(table_.begin() + 1, table_.end(), v,
                               [](double t, double x) { return t >= x; });
    return k_min_ + static_cast<std::uint64_t>(it - table_.begin()) - 1;
  }
  std::uint64_t lo = k_min_ + table_.size() - 1;  // survival(lo) >= v
  std::uint64_t step = table_.size();
  std::uint64_t hi = lo;
  const std::uint64_t cap = k_max_ ? *k_max_ + 1 : std::numeric_limits<std::uint64_t>::max() / 4;
  do {
    lo = hi;
    hi = std::min(cap, hi + step);
    step *= 2;
  } while (hi < cap && survival(hi) >= v);
  // survival(lo) >= v > survival(hi) (or hi == cap)
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (survival(mid) >= v) lo = mid;
    else hi = mid;
  }
  return lo;
}

}  // namespace webgraph
