#include "mrqa/recurrence.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

#include <gtest/gtest.h>

#include "mrqa/errors.hpp"
#include "mrqa/medit.hpp"
#include "mrqa/rng.hpp"

namespace {

using namespace mrqa;

DistanceMatrix make_matrix(std::size_t w, const std::vector<double>& vals) {
  DistanceMatrix d;
  d.width = w;
  d.data = vals;
  d.start_times.resize(w);
  for (std::size_t i = 0; i < w; ++i) d.start_times[i] = static_cast<double>(i);
  return d;
}

DistanceMatrix random_matrix(Rng& rng, std::size_t w) {
  DistanceMatrix d;
  d.width = w;
  d.data.assign(w * w, 0.0);
  d.start_times.resize(w);
  for (std::size_t i = 0; i < w; ++i) d.start_times[i] = static_cast<double>(i);
  for (std::size_t i = 0; i < w; ++i) {
    for (std::size_t j = i + 1; j < w; ++j) {
      const double v = rng.uniform_positive();
      d.at(i, j) = v;
      d.at(j, i) = v;
    }
  }
  return d;
}

TEST(ThresholdByRate, NearestRankEpsilonOnSmallMatrix) {
  // 3x3 with off-diagonal distances {1, 4, 2}; population (theiler 1,
  // upper triangle) = {1, 2, 4}. rate 0.34 -> rank ceil(1.02) = 2 ->
  // epsilon = 2. Recurrent pairs: (0,1) d=1 and (1,2) d=2; (0,2) d=4 not.
  const auto d = make_matrix(3, {0, 1, 4,
                                 1, 0, 2,
                                 4, 2, 0});
  const auto rp = threshold_by_rate(d, 0.34, 1);
  EXPECT_DOUBLE_EQ(rp.epsilon, 2.0);
  EXPECT_EQ(rp.width, 3u);
  EXPECT_DOUBLE_EQ(rp.target_rate, 0.34);
  EXPECT_TRUE(rp.at(0, 0));   // LOI always recurrent
  EXPECT_TRUE(rp.at(0, 1));
  EXPECT_TRUE(rp.at(1, 0));
  EXPECT_TRUE(rp.at(1, 2));
  EXPECT_FALSE(rp.at(0, 2));
  EXPECT_FALSE(rp.at(2, 0));

  EXPECT_THROW(threshold_by_rate(d, 0.0, 1), invalid_input_error);
  EXPECT_THROW(threshold_by_rate(d, 1.5, 1), invalid_input_error);
}

TEST(ThresholdByRate, TheilerExcludesNearDiagonalFromPopulation) {
  // Same matrix; theiler = 2 keeps only |i-j| >= 2: population {4}.
  // rate 0.5 -> rank 1 -> epsilon = 4; now every pair recurs.
  const auto d = make_matrix(3, {0, 1, 4,
                                 1, 0, 2,
                                 4, 2, 0});
  const auto rp = threshold_by_rate(d, 0.5, 2);
  EXPECT_DOUBLE_EQ(rp.epsilon, 4.0);
  EXPECT_TRUE(rp.at(0, 2));
  EXPECT_EQ(rp.theiler, 2);
  // theiler >= width leaves an empty population.
  EXPECT_THROW(threshold_by_rate(d, 0.5, 3), invalid_input_error);
}

TEST(ThresholdByRate, RealizedRateMatchesTarget) {
  Rng rng(11);
  const std::size_t w = 60;
  const auto d = random_matrix(rng, w);
  const double rate = 0.15;
  const auto rp = threshold_by_rate(d, rate, 1);
  std::size_t rec = 0, tot = 0;
  for (std::size_t i = 0; i < w; ++i) {
    for (std::size_t j = i + 1; j < w; ++j) {
      ++tot;
      if (rp.at(i, j)) ++rec;
    }
  }
  const double realized = static_cast<double>(rec) / static_cast<double>(tot);
  // Nearest-rank quantile: within one pair of the target.
  EXPECT_NEAR(realized, rate, 1.0 / static_cast<double>(tot) + 1e-12);
  EXPECT_GE(realized, rate - 1e-12);  // ceil rank -> at least the target
}

TEST(DiagonalHistogram, AllOnesThreeByThree) {
  // Fully recurrent 3x3: offset-1 diagonals have runs of length 2 (two of
  // them, both triangles), offset-2 diagonals runs of length 1 (two).
  const auto d = make_matrix(3, {0, 1, 1,
                                 1, 0, 1,
                                 1, 1, 0});
  const auto rp = threshold_by_rate(d, 0.99, 1);
  ASSERT_DOUBLE_EQ(rp.epsilon, 1.0);
  const auto h = diagonal_histogram(rp);
  EXPECT_EQ(h.p(1), 2u);
  EXPECT_EQ(h.p(2), 2u);
  EXPECT_EQ(h.p(3), 0u);
  // DET(l_min=2) = 2*2 / (1*2 + 2*2) = 2/3.
  EXPECT_NEAR(det(h, 2), 2.0 / 3.0, 1e-15);
  EXPECT_DOUBLE_EQ(det(h, 1), 1.0);
}

TEST(DiagonalHistogram, BrokenRunSplitsLengths) {
  // 5x5 plot, recurrences only on the offset-+1 diagonal at (0,1), (1,2)
  // and (3,4): one run of length 2 and one of length 1 per triangle.
  DistanceMatrix d;
  d.width = 5;
  d.data.assign(25, 10.0);
  d.start_times = {0, 1, 2, 3, 4};
  for (std::size_t i = 0; i < 5; ++i) d.at(i, i) = 0.0;
  auto set = [&](std::size_t i, std::size_t j, double v) {
    d.at(i, j) = v;
    d.at(j, i) = v;
  };
  set(0, 1, 1.0);
  set(1, 2, 1.0);
  set(3, 4, 1.0);
  // Population (theiler 1): ten pairs, three at 1.0. rate 0.3 -> ceil(3)=3
  // -> epsilon = 1.
  const auto rp = threshold_by_rate(d, 0.3, 1);
  ASSERT_DOUBLE_EQ(rp.epsilon, 1.0);
  const auto h = diagonal_histogram(rp);
  EXPECT_EQ(h.p(1), 2u);
  EXPECT_EQ(h.p(2), 2u);
  // DET(2) = 4 / 6.
  EXPECT_NEAR(det(h, 2), 2.0 / 3.0, 1e-15);
  // l_min above every run length -> DET 0.
  EXPECT_DOUBLE_EQ(det(h, 3), 0.0);
}

TEST(DiagonalHistogram, TheilerDropsInnerDiagonals) {
  const auto d = make_matrix(3, {0, 1, 1,
                                 1, 0, 1,
                                 1, 1, 0});
  auto rp = threshold_by_rate(d, 0.99, 1);
  rp.theiler = 2;  // reinterpret with a wider exclusion zone
  const auto h = diagonal_histogram(rp);
  EXPECT_EQ(h.p(1), 2u);  // only the offset-2 corner cells remain
  EXPECT_EQ(h.p(2), 0u);
  EXPECT_DOUBLE_EQ(det(h, 1), 1.0);
  EXPECT_THROW(det(h, 0), invalid_input_error);
}

TEST(Det, UndefinedWhenNoRecurrences) {
  DiagonalHistogram h;
  h.width = 4;
  h.counts.assign(4, 0);
  EXPECT_THROW(det(h, 2), undefined_det_error);
}

TEST(WindowSpec, StrideRounding) {
  EXPECT_EQ((WindowSpec{200, 0.75}).stride(), 50u);
  EXPECT_EQ((WindowSpec{200, 0.9}).stride(), 20u);
  EXPECT_EQ((WindowSpec{10, 0.33}).stride(), 7u);   // round(6.7)
  EXPECT_EQ((WindowSpec{10, 0.99}).stride(), 1u);   // clamped to >= 1
  EXPECT_EQ((WindowSpec{10, 0.0}).stride(), 10u);
}

TEST(SlidingWindowDet, MatchesPerWindowRecomputation) {
  Rng rng(2718);
  const std::size_t w = 40;
  const auto d = random_matrix(rng, w);
  const WindowSpec spec{12, 0.5};  // stride 6 -> windows at 0,6,12,18,24,28?
  const double rate = 0.2;
  const std::size_t l_min = 2;
  const auto points = sliding_window_det(d, spec, rate, l_min, 1);

  // Expected window count: positions 0, 6, ..., 28 (last full window).
  const std::size_t stride = spec.stride();
  std::size_t expected = 0;
  for (std::size_t s = 0; s + spec.window_size <= w; s += stride) ++expected;
  ASSERT_EQ(points.size(), expected);

  std::size_t idx = 0;
  for (std::size_t s = 0; s + spec.window_size <= w; s += stride, ++idx) {
    // Re-run the full pipeline on the extracted submatrix.
    DistanceMatrix sub;
    sub.width = spec.window_size;
    sub.data.resize(sub.width * sub.width);
    sub.start_times.resize(sub.width);
    for (std::size_t i = 0; i < sub.width; ++i) {
      sub.start_times[i] = d.start_times[s + i];
      for (std::size_t j = 0; j < sub.width; ++j) {
        sub.at(i, j) = d.at(s + i, s + j);
      }
    }
    const auto rp = threshold_by_rate(sub, rate, 1);
    const double expected_det = det(diagonal_histogram(rp), l_min);
    ASSERT_TRUE(points[idx].det.has_value());
    EXPECT_NEAR(*points[idx].det, expected_det, 1e-12) << "window " << idx;
    double center = 0.0;
    for (std::size_t i = 0; i < sub.width; ++i) center += sub.start_times[i];
    center /= static_cast<double>(sub.width);
    EXPECT_NEAR(points[idx].window_center, center, 1e-12);
  }
}

TEST(SlidingWindowDet, BandedAgreesWithDense) {
  Rng rng(31415);
  const std::size_t w = 50;
  // Build segments so banded and dense share the same generating distances.
  const auto dense = random_matrix(rng, w);
  const WindowSpec spec{10, 0.75};
  BandedDistances banded;
  banded.width = w;
  banded.band = spec.window_size - 1;
  banded.data.assign(w * (banded.band + 1), 0.0);
  banded.start_times = dense.start_times;
  for (std::size_t i = 0; i < w; ++i) {
    for (std::size_t j = i; j <= std::min(w - 1, i + banded.band); ++j) {
      banded.data[i * (banded.band + 1) + (j - i)] = dense.at(i, j);
    }
  }
  const auto a = sliding_window_det(dense, spec, 0.15, 2, 1);
  const auto b = sliding_window_det(banded, spec, 0.15, 2, 1);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    ASSERT_EQ(a[k].det.has_value(), b[k].det.has_value());
    if (a[k].det) {
      EXPECT_DOUBLE_EQ(*a[k].det, *b[k].det);
    }
    EXPECT_DOUBLE_EQ(a[k].window_center, b[k].window_center);
  }
}

TEST(SlidingWindowDet, MissingWindowWhenTheilerEatsEverything) {
  Rng rng(161803);
  const auto d = random_matrix(rng, 12);
  // theiler = window_size: every off-LOI pair inside a 4-wide window is
  // excluded, so no threshold population exists -> missing value.
  const auto pts = sliding_window_det(d, WindowSpec{4, 0.0}, 0.3, 2, 4);
  ASSERT_EQ(pts.size(), 3u);
  for (const auto& p : pts) EXPECT_FALSE(p.det.has_value());
}

TEST(SlidingWindowDet, RequiresEnoughSegments) {
  Rng rng(7);
  const auto d = random_matrix(rng, 5);
  EXPECT_THROW(sliding_window_det(d, WindowSpec{10, 0.5}, 0.2, 2, 1),
               invalid_input_error);
}

TEST(SlidingWindowDet, BandedRejectsNarrowBand) {
  BandedDistances banded;
  banded.width = 20;
  banded.band = 4;  // too narrow for window_size 10
  banded.data.assign(20 * 5, 1.0);
  banded.start_times.assign(20, 0.0);
  EXPECT_THROW(sliding_window_det(banded, WindowSpec{10, 0.5}, 0.2, 2, 1),
               invalid_input_error);
}

}  // namespace
