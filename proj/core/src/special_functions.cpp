#include "mrqa/special_functions.hpp"

#include <cmath>
#include <cstdlib>

#include "mrqa/errors.hpp"

namespace mrqa {

namespace {

// Validity range of the k <= 200 series truncations used below.
constexpr double k_max_rate = 20.0;

void check_rates(double lambda1, double lambda2) {
  if (!(lambda1 > 0.0) || !(lambda2 > 0.0)) {
    throw invalid_input_error("rates must be positive");
  }
  if (lambda1 > k_max_rate || lambda2 > k_max_rate) {
    throw invalid_input_error("rates above 20 exceed the series validity range");
  }
}

}  // namespace

double exponential_pdf(double delta, double lambda) {
  if (!(lambda > 0.0)) {
    throw invalid_input_error("exponential_pdf requires lambda > 0");
  }
  if (delta < 0.0) return 0.0;
  return lambda * std::exp(-lambda * delta);
}

double poisson_pmf(unsigned k, double lambda) {
  if (!(lambda > 0.0)) {
    throw invalid_input_error("poisson_pmf requires lambda > 0");
  }
  return std::exp(static_cast<double>(k) * std::log(lambda) - lambda -
                  std::lgamma(static_cast<double>(k) + 1.0));
}

double erlang_pdf(double t, unsigned n, double lambda) {
  if (n < 1) {
    throw invalid_input_error("erlang_pdf requires n >= 1");
  }
  if (!(lambda > 0.0)) {
    throw invalid_input_error("erlang_pdf requires lambda > 0");
  }
  if (t < 0.0) return 0.0;
  if (t == 0.0) return n == 1 ? lambda : 0.0;
  return std::exp(static_cast<double>(n) * std::log(lambda) +
                  (static_cast<double>(n) - 1.0) * std::log(t) - lambda * t -
                  std::lgamma(static_cast<double>(n)));
}

double bessel_i(int order, double a) {
  if (!(a >= 0.0)) {
    throw invalid_input_error("bessel_i requires a >= 0");
  }
  const int k = std::abs(order);  // I_{-k} = I_k for integer order
  if (a == 0.0) return k == 0 ? 1.0 : 0.0;
  // Power series I_k(a) = sum_m (a/2)^{2m+k} / (m! (m+k)!).
  const double half = 0.5 * a;
  double term = std::exp(static_cast<double>(k) * std::log(half) -
                         std::lgamma(static_cast<double>(k) + 1.0));
  double sum = term;
  for (int m = 1; m < 10000; ++m) {
    term *= half * half /
            (static_cast<double>(m) * (static_cast<double>(m) + k));
    sum += term;
    if (term < sum * 1e-14) break;
  }
  return sum;
}

double marcum_q(double a, double b) {
  if (!(a >= 0.0) || !(b >= 0.0)) {
    throw invalid_input_error("marcum_q requires a, b >= 0");
  }
  if (b == 0.0) return 1.0;                     // integral over full support
  const double l1 = 0.5 * a * a;
  const double l2 = 0.5 * b * b;
  if (a == 0.0) return std::exp(-l2);           // only the k = 0 term
  // Q = exp(-l1-l2) sum_k (l1/l2)^{k/2} I_k(2 sqrt(l1 l2)). Terms may grow
  // before Bessel decay wins, so require several negligible terms beyond the
  // Bessel turnover point before truncating.
  const double arg = 2.0 * std::sqrt(l1 * l2);
  const double log_ratio_half = 0.5 * (std::log(l1) - std::log(l2));
  double sum = 0.0;
  int quiet = 0;
  for (int k = 0; k < 100000; ++k) {
    const double term = std::exp(k * log_ratio_half) * bessel_i(k, arg);
    sum += term;
    if (term < sum * 1e-14 && k > arg) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
  }
  const double q = std::exp(-l1 - l2) * sum;
  return q < 0.0 ? 0.0 : (q > 1.0 ? 1.0 : q);
}

double skellam_pmf(int k, double lambda1, double lambda2) {
  check_rates(lambda1, lambda2);
  if (k < 0) {
    throw invalid_input_error("folded Skellam pmf is defined for k >= 0");
  }
  const double arg = 2.0 * std::sqrt(lambda1 * lambda2);
  const double scale = std::exp(-lambda1 - lambda2);
  if (k == 0) return scale * bessel_i(0, arg);
  const double half_k = 0.5 * static_cast<double>(k);
  const double ratio = lambda1 / lambda2;
  return scale * (std::pow(ratio, half_k) + std::pow(ratio, -half_k)) *
         bessel_i(k, arg);
}

double expected_abs_poisson_difference(double lambda1, double lambda2) {
  check_rates(lambda1, lambda2);
  const double root = std::sqrt(lambda1 * lambda2);
  const double arg = 2.0 * root;
  const double bessel_part =
      2.0 * std::exp(-lambda1 - lambda2) *
      (lambda2 * bessel_i(0, arg) + root * bessel_i(1, arg));
  const double q = marcum_q(std::sqrt(2.0 * lambda1), std::sqrt(2.0 * lambda2));
  return bessel_part + (lambda2 - lambda1) * (1.0 - 2.0 * q);
}

double expected_deletion_cost(double lambda1, double lambda2,
                              double lambda_s) {
  if (!(lambda_s > 0.0)) {
    throw invalid_input_error("expected_deletion_cost requires lambda_s > 0");
  }
  return lambda_s * expected_abs_poisson_difference(lambda1, lambda2);
}

}  // namespace mrqa
