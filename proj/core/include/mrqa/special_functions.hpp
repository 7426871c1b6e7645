#ifndef MRQA_SPECIAL_FUNCTIONS_HPP
#define MRQA_SPECIAL_FUNCTIONS_HPP

namespace mrqa {

// Density of exponential sampling intervals: lambda * exp(-lambda * delta)
// for delta >= 0. lambda > 0.
double exponential_pdf(double delta, double lambda);

// Poisson counting probability lambda^k exp(-lambda) / k!. lambda > 0.
double poisson_pmf(unsigned k, double lambda);

// Erlang density of the time to the n-th sample:
// lambda^n t^{n-1} exp(-lambda t) / (n-1)!. n >= 1, lambda > 0, t >= 0.
double erlang_pdf(double t, unsigned n, double lambda);

// Modified Bessel function of the first kind, integer order, a >= 0.
// Power series summed to relative tolerance 1e-14; I_{-k} = I_k.
double bessel_i(int order, double a);

// First-order Marcum Q function Q_1(a, b), a, b >= 0, computed from the
// Poisson-weighted Bessel series with lambda1 = a^2/2, lambda2 = b^2/2:
//   Q = exp(-l1-l2) * sum_{k>=0} (l1/l2)^{k/2} I_k(2 sqrt(l1 l2)).
// Equals P(X >= Y) for independent X~Poisson(l1), Y~Poisson(l2).
double marcum_q(double a, double b);

// Folded Skellam pmf P(|X - Y| = k) for independent Poisson X, Y:
//   k = 0: exp(-l1-l2) I_0(2 sqrt(l1 l2))
//   k > 0: exp(-l1-l2) [ (l1/l2)^{k/2} + (l2/l1)^{k/2} ] I_k(2 sqrt(l1 l2))
// k >= 0; lambda1, lambda2 in (0, 20] (series truncation validity range).
double skellam_pmf(int k, double lambda1, double lambda2);

// E|X - Y| for independent Poisson X~(lambda1), Y~(lambda2):
//   2 exp(-l1-l2) [ l2 I_0(2 sqrt(l1 l2)) + sqrt(l1 l2) I_1(2 sqrt(l1 l2)) ]
//     + (l2 - l1) (1 - 2 Q_1(sqrt(2 l1), sqrt(2 l2)))
// Symmetric in (lambda1, lambda2).
double expected_abs_poisson_difference(double lambda1, double lambda2);

// Expected minimum deletion cost lambda_s * E|X - Y| between segments drawn
// at sampling rates lambda1, lambda2.
double expected_deletion_cost(double lambda1, double lambda2, double lambda_s);

}  // namespace mrqa

#endif  // MRQA_SPECIAL_FUNCTIONS_HPP
