#include "mrqa/special_functions.hpp"

#include <cmath>
#include <vector>

#include <boost/math/distributions/non_central_chi_squared.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <gtest/gtest.h>

#include "mrqa/errors.hpp"

namespace {

using namespace mrqa;

TEST(ExponentialPdf, ClosedForm) {
  EXPECT_DOUBLE_EQ(exponential_pdf(0.0, 2.0), 2.0);
  EXPECT_NEAR(exponential_pdf(1.0, 2.0), 2.0 * std::exp(-2.0), 1e-16);
  EXPECT_DOUBLE_EQ(exponential_pdf(-0.5, 2.0), 0.0);
  EXPECT_THROW(exponential_pdf(1.0, 0.0), invalid_input_error);
}

TEST(PoissonPmf, ClosedFormAndNormalization) {
  EXPECT_NEAR(poisson_pmf(0, 3.0), std::exp(-3.0), 1e-15);
  EXPECT_NEAR(poisson_pmf(3, 2.0), 8.0 / 6.0 * std::exp(-2.0), 1e-15);
  for (double lambda : {0.5, 2.0, 8.0, 20.0}) {
    double sum = 0.0;
    for (unsigned k = 0; k <= 200; ++k) sum += poisson_pmf(k, lambda);
    EXPECT_NEAR(sum, 1.0, 1e-12) << "lambda " << lambda;
  }
  EXPECT_THROW(poisson_pmf(1, -1.0), invalid_input_error);
}

TEST(ErlangPdf, ClosedFormAndExponentialCase) {
  // n = 1 reduces to the exponential density.
  for (double t : {0.0, 0.3, 2.0}) {
    EXPECT_NEAR(erlang_pdf(t, 1, 1.7), exponential_pdf(t, 1.7), 1e-15);
  }
  // lambda^n t^{n-1} e^{-lambda t}/(n-1)! at n=3, lambda=1.5, t=2:
  // 3.375 * 4 * e^{-3} / 2 = 6.75 e^{-3}.
  EXPECT_NEAR(erlang_pdf(2.0, 3, 1.5), 6.75 * std::exp(-3.0), 1e-14);
  EXPECT_DOUBLE_EQ(erlang_pdf(-1.0, 3, 1.5), 0.0);
  EXPECT_THROW(erlang_pdf(1.0, 0, 1.5), invalid_input_error);
  EXPECT_THROW(erlang_pdf(1.0, 2, 0.0), invalid_input_error);
}

TEST(BesselI, PinnedValuesAndSymmetry) {
  EXPECT_DOUBLE_EQ(bessel_i(0, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(bessel_i(3, 0.0), 0.0);
  EXPECT_NEAR(bessel_i(0, 2.0), 2.2795853023360673, 1e-14);
  EXPECT_NEAR(bessel_i(1, 2.0), 1.5906368546373291, 1e-14);
  EXPECT_DOUBLE_EQ(bessel_i(-2, 1.3), bessel_i(2, 1.3));
  EXPECT_THROW(bessel_i(0, -1.0), invalid_input_error);
}

TEST(BesselI, AgreesWithBoostAcrossGrid) {
  for (int order : {0, 1, 2, 5, 12}) {
    for (double a : {0.05, 0.7, 2.0, 7.5, 12.0}) {
      const double ours = bessel_i(order, a);
      const double ref = boost::math::cyl_bessel_i(order, a);
      EXPECT_NEAR(ours, ref, 1e-13 * std::max(1.0, ref))
          << "order " << order << " a " << a;
    }
  }
}

TEST(BesselI, ThreeTermRecurrence) {
  // I_{k-1}(a) - I_{k+1}(a) = (2k/a) I_k(a).
  for (double a : {0.5, 2.0, 9.0}) {
    for (int k : {1, 2, 6}) {
      const double lhs = bessel_i(k - 1, a) - bessel_i(k + 1, a);
      const double rhs = 2.0 * k / a * bessel_i(k, a);
      EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST(MarcumQ, BoundaryCases) {
  EXPECT_DOUBLE_EQ(marcum_q(1.7, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(marcum_q(0.0, 0.0), 1.0);
  // Q_1(0, b) = exp(-b^2/2).
  for (double b : {0.5, 1.0, 3.0}) {
    EXPECT_NEAR(marcum_q(0.0, b), std::exp(-b * b / 2.0), 1e-14);
  }
  EXPECT_THROW(marcum_q(-1.0, 1.0), invalid_input_error);
}

TEST(MarcumQ, EqualArgumentIdentity) {
  // Q_1(a, a) = (1 + exp(-a^2) I_0(a^2)) / 2; at a = sqrt(2):
  // (1 + e^{-2} I_0(2)) / 2 = 0.6542541612768356.
  const double a = std::sqrt(2.0);
  EXPECT_NEAR(marcum_q(a, a),
              0.5 * (1.0 + std::exp(-2.0) * bessel_i(0, 2.0)), 1e-14);
  EXPECT_NEAR(marcum_q(a, a), 0.6542541612768356, 1e-13);
}

TEST(MarcumQ, AgreesWithNoncentralChiSquared) {
  // Q_1(a, b) = 1 - CDF of chi'^2(2 dof, noncentrality a^2) at b^2.
  for (double a : {0.3, 1.0, 2.0, 4.0}) {
    for (double b : {0.2, 1.0, 2.5, 5.0}) {
      const boost::math::non_central_chi_squared dist(2.0, a * a);
      const double ref = boost::math::cdf(boost::math::complement(dist, b * b));
      EXPECT_NEAR(marcum_q(a, b), ref, 1e-11)
          << "a " << a << " b " << b;
    }
  }
}

TEST(MarcumQ, MatchesPoissonRaceProbability) {
  // Q_1(sqrt(2 l1), sqrt(2 l2)) = P(X >= Y), X~Poisson(l1), Y~Poisson(l2).
  for (double l1 : {0.5, 1.0, 3.0}) {
    for (double l2 : {0.5, 2.0, 6.0}) {
      double p = 0.0;
      for (unsigned y = 0; y <= 80; ++y) {
        double tail = 0.0;
        for (unsigned x = y; x <= 120; ++x) tail += poisson_pmf(x, l1);
        p += poisson_pmf(y, l2) * tail;
      }
      EXPECT_NEAR(marcum_q(std::sqrt(2.0 * l1), std::sqrt(2.0 * l2)), p,
                  1e-10)
          << "l1 " << l1 << " l2 " << l2;
    }
  }
}

TEST(SkellamPmf, PinnedValueSymmetryAndOracle) {
  // P(|X-Y| = 0) at unit rates: e^{-2} I_0(2).
  EXPECT_NEAR(skellam_pmf(0, 1.0, 1.0), 0.30850832255367105, 1e-14);
  EXPECT_NEAR(skellam_pmf(0, 1.0, 1.0),
              std::exp(-2.0) * bessel_i(0, 2.0), 1e-15);
  EXPECT_NEAR(skellam_pmf(3, 0.7, 2.2), skellam_pmf(3, 2.2, 0.7), 1e-15);
  EXPECT_THROW(skellam_pmf(-1, 1.0, 1.0), invalid_input_error);
  EXPECT_THROW(skellam_pmf(0, 0.0, 1.0), invalid_input_error);
  EXPECT_THROW(skellam_pmf(0, 1.0, 25.0), invalid_input_error);

  // Independent double-sum oracle: P(|X-Y|=k) summed directly.
  for (double l1 : {0.5, 2.0, 8.0}) {
    for (double l2 : {1.0, 4.0}) {
      for (int k = 0; k <= 8; ++k) {
        double p = 0.0;
        for (unsigned x = 0; x <= 120; ++x) {
          const double px = poisson_pmf(x, l1);
          const int xk = static_cast<int>(x);
          if (xk - k >= 0) {
            p += px * poisson_pmf(static_cast<unsigned>(xk - k), l2);
          }
          if (k > 0 && xk + k <= 200) {
            p += px * poisson_pmf(static_cast<unsigned>(xk + k), l2);
          }
        }
        EXPECT_NEAR(skellam_pmf(k, l1, l2), p, 1e-12)
            << "l1 " << l1 << " l2 " << l2 << " k " << k;
      }
    }
  }
}

TEST(SkellamPmf, NormalizesOverFoldedSupport) {
  for (double l1 : {0.5, 3.0, 12.0}) {
    for (double l2 : {0.5, 5.0}) {
      double sum = 0.0;
      for (int k = 0; k <= 200; ++k) sum += skellam_pmf(k, l1, l2);
      EXPECT_NEAR(sum, 1.0, 1e-11) << "l1 " << l1 << " l2 " << l2;
    }
  }
}

TEST(ExpectedAbsPoissonDifference, PinnedValueAndOracle) {
  // E|X-Y| at unit rates: 2 e^{-2} (I_0(2) + I_1(2)).
  const double expected = 2.0 * std::exp(-2.0) *
                          (bessel_i(0, 2.0) + bessel_i(1, 2.0));
  EXPECT_NEAR(expected_abs_poisson_difference(1.0, 1.0), expected, 1e-14);
  EXPECT_NEAR(expected_abs_poisson_difference(1.0, 1.0),
              1.0475552236052172, 1e-13);
  EXPECT_NEAR(expected_abs_poisson_difference(2.0, 5.0),
              expected_abs_poisson_difference(5.0, 2.0), 1e-12);

  // Equals sum_k k * foldedSkellam(k).
  for (double l1 : {0.5, 1.0, 4.0}) {
    for (double l2 : {1.0, 8.0}) {
      double series = 0.0;
      for (int k = 1; k <= 250; ++k) {
        series += static_cast<double>(k) * skellam_pmf(k, l1, l2);
      }
      EXPECT_NEAR(expected_abs_poisson_difference(l1, l2), series, 1e-10)
          << "l1 " << l1 << " l2 " << l2;
    }
  }

  // Direct double sum as a second, fully independent oracle.
  for (double l1 : {0.5, 3.0}) {
    for (double l2 : {1.5, 6.0}) {
      double e = 0.0;
      for (unsigned x = 0; x <= 120; ++x) {
        for (unsigned y = 0; y <= 120; ++y) {
          e += std::abs(static_cast<double>(x) - static_cast<double>(y)) *
               poisson_pmf(x, l1) * poisson_pmf(y, l2);
        }
      }
      EXPECT_NEAR(expected_abs_poisson_difference(l1, l2), e, 1e-10);
    }
  }

  // Large rate gap: E|X-Y| approaches |l1 - l2|.
  EXPECT_NEAR(expected_abs_poisson_difference(0.5, 18.0), 17.5, 0.05);
}

TEST(ExpectedDeletionCost, ScalesLinearlyInLambdaS) {
  const double base = expected_abs_poisson_difference(2.0, 3.0);
  EXPECT_NEAR(expected_deletion_cost(2.0, 3.0, 1.0), base, 1e-15);
  EXPECT_NEAR(expected_deletion_cost(2.0, 3.0, 2.5), 2.5 * base, 1e-14);
  EXPECT_THROW(expected_deletion_cost(2.0, 3.0, 0.0), invalid_input_error);
  EXPECT_THROW(expected_deletion_cost(0.0, 3.0, 1.0), invalid_input_error);
}

}  // namespace
