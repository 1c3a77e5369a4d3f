#include <gtest/gtest.h>

#include <random>

#include "oracles/zeta_oracle.hpp"
#include "support.hpp"
#include "webgraph/degree_stats.hpp"
#include "webgraph/graph_io.hpp"
#include "webgraph/zeta.hpp"

using namespace webgraph;
using Bin = DegreeHistogram::Bin;

namespace {

DegreeHistogram hist(std::vector<Bin> bins) { return DegreeHistogram(DegreeKind::In, std::move(bins)); }

DegreeHistogram hist_of(const std::vector<std::uint64_t>& v) { return DegreeHistogram::from_values(DegreeKind::In, v); }

}  // namespace

TEST(Histogram, Cycle) {
  const auto h = degree_histogram(testing_support::cycle(3), DegreeKind::In);
  ASSERT_EQ(h.distinct(), 1u);
  EXPECT_EQ(h.count(1), 3u);
}

TEST(Histogram, StarOut) {
  const auto g = testing_support::graph_of(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const auto h = degree_histogram(g, DegreeKind::Out);
  EXPECT_EQ(h.count(0), 4u);
  EXPECT_EQ(h.count(4), 1u);
  EXPECT_EQ(h.distinct(), 2u);
}

TEST(Histogram, ToyFixtureIn) {
  const auto g = load_graph(testing_support::data_path("toy_bowtie.txt"));
  const auto h = degree_histogram(g, DegreeKind::In);
  EXPECT_EQ(h.total_nodes(), 8u);
  EXPECT_EQ(h.count(0), 2u);
  EXPECT_EQ(h.count(1), 4u);
  EXPECT_EQ(h.count(2), 2u);
}

TEST(Histogram, NormalizationAndMeanIdentity) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = testing_support::graph_of(300, testing_support::random_edges(300, 0.01 * seed, seed));
    const auto in = degree_histogram(g, DegreeKind::In);
    const auto out = degree_histogram(g, DegreeKind::Out);
    double total = 0.0;
    for (auto b : in.bins()) total += in.probability(b.degree);
    EXPECT_NEAR(total, 1.0, 1e-12);
    EXPECT_EQ(summarize(in).mean, summarize(out).mean);
  }
}

TEST(Histogram, SameForAnyWorkerCount) {
  const auto g = testing_support::graph_of(2000, testing_support::random_edges(2000, 0.003, 5));
  for (auto kind : {DegreeKind::In, DegreeKind::Out, DegreeKind::Reciprocal, DegreeKind::Undirected})
    for (unsigned w : {2u, 3u, 8u}) EXPECT_EQ(degree_histogram(g, kind, 1), degree_histogram(g, kind, w));
}

TEST(Cumulative, Examples) {
  const auto c = cumulative(hist({{1, 3}}));
  EXPECT_EQ(c.at(0), 1.0);
  EXPECT_EQ(c.at(1), 1.0);
  EXPECT_EQ(c.at(2), 0.0);
  const auto s = cumulative(hist({{0, 4}, {4, 1}}));
  EXPECT_EQ(s.at(0), 1.0);
  for (std::uint64_t k = 1; k <= 4; ++k) EXPECT_DOUBLE_EQ(s.at(k), 0.2);
  EXPECT_EQ(s.at(5), 0.0);
}

TEST(Cumulative, MatchesDoubleLoopAndDifferencesExactly) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::uint64_t> deg(0, 60), cnt(1, 40);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Bin> bins;
    for (int i = 0; i < 25; ++i) bins.push_back({deg(rng), cnt(rng)});
    const auto h = hist(bins);
    const auto c = cumulative(h);
    for (std::uint64_t k = 0; k <= 62; ++k) {
      std::uint64_t tail = 0;
      for (auto b : bins)
        if (b.degree >= k) tail += b.count;
      EXPECT_EQ(c.tail_count(k), tail);
      EXPECT_DOUBLE_EQ(c.at(k), static_cast<double>(tail) / static_cast<double>(h.total_nodes()));
      EXPECT_EQ(c.tail_count(k) - c.tail_count(k + 1), h.count(k));
    }
  }
}

TEST(Summary, RegularAndTwoPoint) {
  const auto r = summarize(hist({{4, 17}}));
  EXPECT_DOUBLE_EQ(r.kappa.value(), 4.0);
  EXPECT_EQ(r.sigma, 0.0);
  const auto t = summarize(hist({{1, 1}, {3, 1}}));
  EXPECT_DOUBLE_EQ(t.mean, 2.0);
  EXPECT_DOUBLE_EQ(t.kappa.value(), 2.5);
  EXPECT_DOUBLE_EQ(t.sigma, 1.0);
  EXPECT_EQ(t.max, 3u);
}

TEST(Summary, AllZeroKappaUndefined) {
  const auto s = summarize(hist({{0, 5}}));
  EXPECT_FALSE(s.kappa.defined());
  EXPECT_FALSE(s.kappa.reason().empty());
  EXPECT_THROW(s.kappa.value(), NumericError);
}

TEST(Summary, KappaMatchesDirectSum) {
  const auto v = oracle::zeta_sample(2.5, 100000, 11);
  long double s1 = 0, s2 = 0;
  for (auto k : v) {
    s1 += k;
    s2 += static_cast<long double>(k) * k;
  }
  const double expect = static_cast<double>(s2 / s1);
  EXPECT_NEAR(summarize(hist_of(v)).kappa.value(), expect, 1e-12 * expect);
}

TEST(Summary, KappaSeparatesHeavyTailFromPoisson) {
  const auto z = oracle::zeta_sample(2.1, 100000, 3);
  const auto hz = summarize(hist_of(z));
  std::mt19937_64 rng(4);
  std::poisson_distribution<std::uint64_t> pd(hz.mean);
  std::vector<std::uint64_t> p(100000);
  for (auto& x : p) x = pd(rng);
  const auto hp = summarize(hist_of(p));
  EXPECT_GE(hz.kappa.value(), 10.0 * hp.kappa.value());
}

TEST(CrossedHeterogeneity, Examples) {
  EXPECT_DOUBLE_EQ(crossed_heterogeneity(testing_support::cycle(3)).value(), 1.0);
  EXPECT_DOUBLE_EQ(crossed_heterogeneity(testing_support::graph_of(2, {{0, 1}, {1, 0}})).value(), 1.0);
  // toy fixture: sum k_in k_out = 6 over sum k_in = 8
  const auto g = load_graph(testing_support::data_path("toy_bowtie.txt"));
  EXPECT_DOUBLE_EQ(crossed_heterogeneity(g).value(), 0.75);
  EXPECT_FALSE(crossed_heterogeneity(testing_support::graph_of(3, {})).defined());
}

TEST(Zeta, SumsAgreeWithDirectSummation) {
  for (double s : {1.6, 2.0, 2.5, 3.5}) {
    for (std::uint64_t a : {1ull, 3ull, 50ull}) {
      long double direct = 0;
      for (std::uint64_t k = 200000; k >= a; --k) direct += std::pow(static_cast<long double>(k), -s);
      // remaining tail via integral, half-term and first derivative correction
      const long double b = 200001.0L;
      direct += std::pow(b, 1 - s) / (s - 1) + std::pow(b, -s) / 2 + s * std::pow(b, -s - 1) / 12;
      EXPECT_NEAR(hurwitz_zeta(s, a), static_cast<double>(direct), 1e-10 * static_cast<double>(direct)) << s << " " << a;
    }
  }
}

TEST(Mle, RecoversZetaExponent) {
  const auto v = oracle::zeta_sample(2.5, 100000, 21);
  const auto fit = mle_powerlaw(hist_of(v), 1);
  EXPECT_NEAR(fit.gamma, 2.5, 0.05);
  EXPECT_GT(fit.stderr, 0.0);
  EXPECT_EQ(fit.n_tail, 100000u);
  EXPECT_TRUE(fit.powerlaw_plausible);
  EXPECT_LE(fit.ks, kPlausibleKs);
}

TEST(Mle, ConsistencyOverObservedExponentRange) {
  for (double g0 : {1.6, 1.9, 2.2}) {
    const auto v = oracle::zeta_sample(g0, 100000, static_cast<std::uint64_t>(g0 * 1000));
    EXPECT_LT(std::abs(mle_powerlaw(hist_of(v), 1).gamma - g0), 0.05) << g0;
  }
}

TEST(Mle, GeometricSampleFlaggedAsFasterDecay) {
  const auto v = oracle::geometric_sample(6.0, 100000, 5);
  const auto fit = mle_powerlaw(hist_of(v), 1);
  EXPECT_GT(fit.gamma, 1.0);
  EXPECT_GT(fit.ks, kPlausibleKs);
  EXPECT_FALSE(fit.powerlaw_plausible);
}

TEST(Mle, DegenerateSupportIsFitError) {
  EXPECT_THROW(mle_powerlaw(hist({{1, 1000}}), 1), FitError);
  EXPECT_THROW(mle_powerlaw(hist({{1, 10}, {2, 10}, {3, 10}}), 1), FitError);
  EXPECT_THROW(mle_powerlaw(hist({{0, 1000}}), 1), FitError);
}

TEST(Mle, TruncatedRange) {
  const auto v = oracle::zeta_sample(2.2, 100000, 77);
  const auto fit = mle_powerlaw(hist_of(v), 1, 1000);
  EXPECT_TRUE(fit.truncated);
  EXPECT_LE(fit.k_max_fit, 1000u);
  EXPECT_NEAR(fit.gamma, 2.2, 0.05);
}

TEST(FitRange, PureZetaPicksSmallKmin) {
  const auto v = oracle::zeta_sample(2.2, 100000, 8);
  const auto r = select_fit_range(hist_of(v));
  EXPECT_GE(r.k_min, 1u);
  EXPECT_LE(r.k_min, 3u);
  EXPECT_EQ(r.k_max_fit, *std::max_element(v.begin(), v.end()));
}

TEST(FitRange, RecoversSpliceOnset) {
  std::mt19937_64 rng(12);
  const ZetaDistribution tail(2.2, 50);
  std::uniform_int_distribution<std::uint64_t> noise(1, 49);
  std::vector<std::uint64_t> v;
  for (int i = 0; i < 30000; ++i) v.push_back(tail(rng));
  for (int i = 0; i < 30000; ++i) v.push_back(noise(rng));
  const auto r = select_fit_range(hist_of(v));
  EXPECT_GE(r.k_min, 40u);
  EXPECT_LE(r.k_min, 70u);
  const auto fit = fit_powerlaw(hist_of(v));
  EXPECT_EQ(fit.k_min, r.k_min);
  EXPECT_NEAR(fit.gamma, 2.2, 0.1);
}

TEST(FitRange, SingleValueIsError) { EXPECT_THROW(select_fit_range(hist({{5, 100}})), FitError); }

TEST(LogBins, ConserveCounts) {
  const auto v = oracle::zeta_sample(2.0, 20000, 1);
  const auto h = hist_of(v);
  std::uint64_t total = 0;
  for (const auto& b : log_binned(h, 5)) {
    EXPECT_LT(b.lower, b.upper);
    total += b.count;
  }
  EXPECT_EQ(total, h.total_nodes());
}
