#ifndef MRQA_STATS_HPP
#define MRQA_STATS_HPP

#include <cstddef>
#include <vector>

namespace mrqa {

// Standard normal CDF via erfc.
double normal_cdf(double x);

// One-sample Kolmogorov–Smirnov statistic of the sample against the standard
// normal CDF (sample is copied and sorted). n >= 1.
double ks_statistic_normal(const std::vector<double>& sample);

struct KsTwoSampleResult {
  double statistic = 0.0;
  double p_value = 1.0;  // asymptotic (Stephens-corrected Kolmogorov Q)
};

// Two-sample KS statistic and asymptotic p-value.
KsTwoSampleResult ks_two_sample(const std::vector<double>& x,
                                const std::vector<double>& y);

// Kolmogorov survival function Q(lambda) = 2 sum_{k>=1} (-1)^{k-1}
// exp(-2 k^2 lambda^2), clamped to [0, 1].
double kolmogorov_q(double lambda);

// Spearman rank correlation (average ranks on ties). Returns 0 when either
// input is constant. Lengths must match, n >= 2.
double spearman_rho(const std::vector<double>& x, const std::vector<double>& y);

// Upper-tail probability of the chi-squared distribution with dof degrees of
// freedom (regularized upper incomplete gamma).
double chi2_sf(double x, int dof);

// Regularized incomplete gamma functions P(a,x) and Q(a,x) = 1 - P(a,x)
// (series/continued-fraction evaluation), a > 0, x >= 0.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Sample mean and (population=false: n-1 denominator) standard deviation.
double mean_of(const std::vector<double>& v);
double stddev_of(const std::vector<double>& v);

// Nearest-rank empirical quantile: the ceil(q*n)-th smallest element
// (1-indexed), q in (0, 1]. The vector is copied and sorted. n >= 1.
double quantile_nearest_rank(std::vector<double> v, double q);

}  // namespace mrqa

#endif  // MRQA_STATS_HPP
