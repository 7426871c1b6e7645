#include "mrqa/stats.hpp"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "mrqa/errors.hpp"
#include "mrqa/rng.hpp"

namespace {

using namespace mrqa;

TEST(NormalCdf, ReferenceValues) {
  EXPECT_DOUBLE_EQ(normal_cdf(0.0), 0.5);
  // Phi(1) and Phi(-1): 16-digit references from erfc.
  EXPECT_NEAR(normal_cdf(1.0), 0.8413447460685429, 1e-15);
  EXPECT_NEAR(normal_cdf(-1.0), 0.15865525393145705, 1e-15);
  EXPECT_NEAR(normal_cdf(1.0) + normal_cdf(-1.0), 1.0, 1e-15);
  EXPECT_NEAR(normal_cdf(6.0), 1.0, 2e-9);
}

TEST(KsStatisticNormal, HandComputedThreePoint) {
  // Sorted sample {-1, 0, 1}; empirical CDF steps 1/3, 2/3, 1.
  // Phi(-1) = 0.158655..., Phi(0) = 0.5, Phi(1) = 0.841344...
  // D = max over i of max(i/n - F(x_i), F(x_i) - (i-1)/n)
  //   = max(0.17468..., 0.15865...; 0.16667, 0.16667; 0.15865, 0.17468)
  //   = 1/3 - Phi(-1) = 0.17467807940187643.
  const double d = ks_statistic_normal({-1.0, 0.0, 1.0});
  EXPECT_NEAR(d, 1.0 / 3.0 - 0.15865525393145705, 1e-12);
}

TEST(KsStatisticNormal, LargeGaussianSampleIsSmall) {
  Rng rng(99);
  std::vector<double> sample(20000);
  for (double& v : sample) v = rng.normal();
  // Expected D ~ 0.87/sqrt(n) ~ 0.006; reject only far beyond that.
  EXPECT_LT(ks_statistic_normal(sample), 0.02);
  std::vector<double> shifted = sample;
  for (double& v : shifted) v += 1.0;
  EXPECT_GT(ks_statistic_normal(shifted), 0.3);
}

TEST(KolmogorovQ, ReferenceValues) {
  // Q(1.36) = 2[exp(-2*1.36^2) - exp(-8*1.36^2) + ...] ~ 0.0494859;
  // lambda ~ 1.358 is the classic 5% critical point.
  EXPECT_NEAR(kolmogorov_q(1.36), 0.0494859, 2e-5);
  EXPECT_NEAR(kolmogorov_q(0.5), 0.9639452436648751, 1e-9);
  EXPECT_DOUBLE_EQ(kolmogorov_q(0.0), 1.0);
  EXPECT_NEAR(kolmogorov_q(3.0), 0.0, 1e-7);
  EXPECT_GE(kolmogorov_q(0.05), 0.0);
  EXPECT_LE(kolmogorov_q(0.05), 1.0);
}

TEST(KsTwoSample, IdenticalSamplesHaveHighP) {
  Rng rng(123);
  std::vector<double> x(3000), y(3000);
  for (double& v : x) v = rng.normal();
  for (double& v : y) v = rng.normal();
  const auto r = ks_two_sample(x, y);
  EXPECT_LT(r.statistic, 0.05);
  EXPECT_GT(r.p_value, 0.05);

  std::vector<double> z = y;
  for (double& v : z) v = v * 3.0 + 2.0;
  const auto r2 = ks_two_sample(x, z);
  EXPECT_LT(r2.p_value, 1e-6);
  EXPECT_GT(r2.statistic, 0.3);
}

TEST(KsTwoSample, ExactSmallSampleStatistic) {
  // x = {1, 2}, y = {1.5}: CDF gap peaks at 1/2 (after x=1, before y=1.5).
  const auto r = ks_two_sample({1.0, 2.0}, {1.5});
  EXPECT_NEAR(r.statistic, 0.5, 1e-12);
  // Disjoint supports: D = 1.
  const auto r2 = ks_two_sample({0.0, 0.1}, {5.0, 6.0});
  EXPECT_NEAR(r2.statistic, 1.0, 1e-12);
}

TEST(SpearmanRho, MonotoneAndTies) {
  EXPECT_DOUBLE_EQ(spearman_rho({1, 2, 3, 4}, {10, 20, 30, 40}), 1.0);
  EXPECT_DOUBLE_EQ(spearman_rho({1, 2, 3, 4}, {40, 30, 20, 10}), -1.0);
  // Any strictly increasing transform preserves rho = 1.
  EXPECT_DOUBLE_EQ(spearman_rho({1, 2, 3, 4}, {1, 8, 27, 64}), 1.0);
  // Constant input is defined as 0.
  EXPECT_DOUBLE_EQ(spearman_rho({1, 2, 3}, {5, 5, 5}), 0.0);
  // Hand value with a tie: x = {1,2,3,4}, y = {10,20,20,30}.
  // y ranks: 1, 2.5, 2.5, 4; x ranks 1..4.
  // rho = cov/sd*sd: d = {0, -0.5, 0.5, 0}; with average-rank Pearson:
  // sum xy = 1*1 + 2*2.5 + 3*2.5 + 4*4 = 29.5; n=4, mx=my=2.5,
  // Sxx = 5, Syy = 30.25 - 25 + ... compute: y ranks squared sum =
  // 1 + 6.25 + 6.25 + 16 = 29.5 -> Syy = 29.5 - 4*6.25 = 4.5,
  // Sxy = 29.5 - 25 = 4.5 -> wait Sxx = 30 - 25 = 5.
  // rho = 4.5 / sqrt(5*4.5) = sqrt(4.5/5) = 0.9486832980505138.
  EXPECT_NEAR(spearman_rho({1, 2, 3, 4}, {10, 20, 20, 30}),
              0.9486832980505138, 1e-12);
}

TEST(Chi2Sf, ClosedFormTwoDof) {
  // With 2 dof the survival function is exp(-x/2).
  EXPECT_NEAR(chi2_sf(2.0, 2), std::exp(-1.0), 1e-12);
  EXPECT_NEAR(chi2_sf(5.0, 2), std::exp(-2.5), 1e-12);
  EXPECT_DOUBLE_EQ(chi2_sf(0.0, 3), 1.0);
  // 1 dof relates to the normal tail: P(chi2 > x) = 2(1 - Phi(sqrt(x))).
  EXPECT_NEAR(chi2_sf(4.0, 1), 2.0 * (1.0 - normal_cdf(2.0)), 1e-12);
}

TEST(GammaPq, ComplementAndKnownValues) {
  // P(1, x) = 1 - exp(-x).
  EXPECT_NEAR(gamma_p(1.0, 0.7), 1.0 - std::exp(-0.7), 1e-13);
  EXPECT_NEAR(gamma_q(1.0, 0.7), std::exp(-0.7), 1e-13);
  for (double a : {0.3, 1.0, 2.5, 10.0}) {
    for (double x : {0.01, 0.5, 2.0, 15.0}) {
      EXPECT_NEAR(gamma_p(a, x) + gamma_q(a, x), 1.0, 1e-12);
    }
  }
  // P(3, x): Poisson tail identity P(3,x) = 1 - e^{-x}(1 + x + x^2/2).
  const double x = 2.3;
  EXPECT_NEAR(gamma_p(3.0, x),
              1.0 - std::exp(-x) * (1.0 + x + x * x / 2.0), 1e-12);
}

TEST(MeanStddev, SmallExactCases) {
  EXPECT_DOUBLE_EQ(mean_of({1.0, 2.0, 3.0, 4.0}), 2.5);
  // Sample stddev with n-1: var of {2,4,4,4,5,5,7,9} = 32/7.
  EXPECT_NEAR(stddev_of({2, 4, 4, 4, 5, 5, 7, 9}), std::sqrt(32.0 / 7.0),
              1e-12);
}

TEST(QuantileNearestRank, PinnedConvention) {
  std::vector<double> v{40.0, 10.0, 30.0, 20.0};
  // rank = ceil(q*n) clamped to [1, n]; 1-indexed into the sorted copy.
  EXPECT_DOUBLE_EQ(quantile_nearest_rank(v, 0.5), 20.0);   // ceil(2) = 2
  EXPECT_DOUBLE_EQ(quantile_nearest_rank(v, 0.51), 30.0);  // ceil(2.04) = 3
  EXPECT_DOUBLE_EQ(quantile_nearest_rank(v, 0.95), 40.0);  // ceil(3.8) = 4
  EXPECT_DOUBLE_EQ(quantile_nearest_rank(v, 1.0), 40.0);
  EXPECT_DOUBLE_EQ(quantile_nearest_rank(v, 0.01), 10.0);  // ceil(0.04) = 1
  EXPECT_DOUBLE_EQ(quantile_nearest_rank({7.0}, 0.95), 7.0);
}

}  // namespace
