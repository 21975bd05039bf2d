#include <gtest/gtest.h>

#include "metric_fixtures.hpp"
#include "zicl/metrics.hpp"
#include "zicl/util.hpp"

using namespace zicl;

TEST(Metrics, HandComputedFixtures) {
  for (const auto& f : zicl::testing::metric_fixtures()) {
    const auto s = metrics::compute(f.preds, f.golds, f.num_classes);
    EXPECT_NEAR(s.accuracy, f.accuracy, 1e-6) << f.name;
    EXPECT_NEAR(s.macro_f1, f.macro_f1, 1e-6) << f.name;
  }
}

TEST(Metrics, MatchesPrecisionRecallForm) {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 2 + rng.below(4);
    const std::size_t n = 1 + rng.below(60);
    std::vector<std::size_t> g(n), p(n);
    for (std::size_t i = 0; i < n; ++i) {
      g[i] = rng.below(k);
      p[i] = rng.below(k);
    }
    double f1 = 0.0;
    std::size_t hits = 0;
    for (std::size_t c = 0; c < k; ++c) {
      double tp = 0, pp = 0, gp = 0;
      for (std::size_t i = 0; i < n; ++i) {
        tp += (p[i] == c && g[i] == c);
        pp += p[i] == c;
        gp += g[i] == c;
      }
      const double prec = pp ? tp / pp : 0.0;
      const double rec = gp ? tp / gp : 0.0;
      f1 += prec + rec > 0 ? 2 * prec * rec / (prec + rec) : 0.0;
    }
    for (std::size_t i = 0; i < n; ++i) hits += p[i] == g[i];
    const auto s = metrics::compute(p, g, k);
    EXPECT_NEAR(s.macro_f1, f1 / static_cast<double>(k), 1e-12);
    EXPECT_NEAR(s.accuracy, static_cast<double>(hits) / static_cast<double>(n), 1e-12);
  }
}

TEST(Metrics, RejectsBadInput) {
  const std::vector<std::size_t> a = {0, 1};
  const std::vector<std::size_t> b = {0};
  const std::vector<std::size_t> c = {0, 2};
  EXPECT_THROW(metrics::compute(a, b, 2), std::invalid_argument);
  EXPECT_THROW(metrics::compute({}, {}, 2), std::invalid_argument);
  EXPECT_THROW(metrics::compute(c, a, 2), std::invalid_argument);
}

TEST(Metrics, MeanAndPopulationStd) {
  const std::vector<double> xs = {0.5, 0.7, 0.9};
  EXPECT_NEAR(metrics::mean(xs), 0.7, 1e-12);
  EXPECT_NEAR(metrics::stddev(xs), 0.16329931618554522, 1e-12);
  const std::vector<double> one = {0.4};
  EXPECT_EQ(metrics::stddev(one), 0.0);
}
