#include "mrqa/recurrence.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "mrqa/errors.hpp"
#include "mrqa/stats.hpp"

namespace mrqa {

namespace {

// Excluded-neighborhood half-width: pairs with |i - j| < this are outside
// every statistic (theiler = 1 excludes only the LOI).
std::size_t exclusion(int theiler) {
  return static_cast<std::size_t>(std::max(theiler, 1));
}

}  // namespace

RecurrencePlot threshold_by_rate(const DistanceMatrix& d, double rate,
                                 int theiler) {
  if (!(rate > 0.0) || !(rate < 1.0)) {
    throw invalid_input_error("recurrence rate must be in (0, 1)");
  }
  if (d.width < 2) {
    throw invalid_input_error("distance matrix too small to threshold");
  }
  const std::size_t excl = exclusion(theiler);
  std::vector<double> population;
  population.reserve(d.width * d.width / 2);
  for (std::size_t i = 0; i < d.width; ++i) {
    for (std::size_t j = i + excl; j < d.width; ++j) {
      population.push_back(d.at(i, j));
    }
  }
  if (population.empty()) {
    throw invalid_input_error("theiler window excludes every pair");
  }
  const double eps = quantile_nearest_rank(std::move(population), rate);

  RecurrencePlot rp;
  rp.width = d.width;
  rp.epsilon = eps;
  rp.target_rate = rate;
  rp.theiler = theiler;
  rp.r.assign(d.width * d.width, 0);
  for (std::size_t i = 0; i < d.width; ++i) {
    for (std::size_t j = 0; j < d.width; ++j) {
      rp.r[i * d.width + j] = d.at(i, j) <= eps ? 1 : 0;
    }
  }
  return rp;
}

DiagonalHistogram diagonal_histogram(const RecurrencePlot& rp) {
  if (rp.width == 0) {
    throw invalid_input_error("empty recurrence plot");
  }
  DiagonalHistogram hist;
  hist.width = rp.width;
  hist.theiler = rp.theiler;
  hist.counts.assign(rp.width, 0);  // lengths 1..width-1 possible off-LOI
  const std::size_t excl = exclusion(rp.theiler);
  for (std::size_t off = excl; off < rp.width; ++off) {
    std::size_t run = 0;
    for (std::size_t i = 0; i + off < rp.width; ++i) {
      if (rp.at(i, i + off)) {
        ++run;
      } else if (run > 0) {
        hist.counts[run] += 2;  // upper + symmetric lower copy
        run = 0;
      }
    }
    if (run > 0) hist.counts[run] += 2;
  }
  return hist;
}

double det(const DiagonalHistogram& hist, std::size_t l_min) {
  if (l_min < 1) {
    throw invalid_input_error("l_min must be >= 1");
  }
  double num = 0.0;
  double den = 0.0;
  for (std::size_t l = 1; l < hist.counts.size(); ++l) {
    const double weighted =
        static_cast<double>(l) * static_cast<double>(hist.counts[l]);
    den += weighted;
    if (l >= l_min) num += weighted;
  }
  if (den == 0.0) {
    throw undefined_det_error("no off-LOI recurrence points: DET undefined");
  }
  return num / den;
}

std::size_t WindowSpec::stride() const {
  const auto raw = static_cast<long long>(
      std::llround(static_cast<double>(window_size) * (1.0 - overlap)));
  return raw < 1 ? 1 : static_cast<std::size_t>(raw);
}

namespace {

// Shared sliding engine. Access(i, j) must be valid for |i - j| < s.
template <typename Access>
std::vector<DetPoint> sliding_impl(std::size_t width,
                                   const std::vector<double>& start_times,
                                   const Access& dist, const WindowSpec& spec,
                                   double rate, std::size_t l_min,
                                   int theiler) {
  if (spec.window_size < 2) {
    throw invalid_input_error("window size must be >= 2");
  }
  if (!(spec.overlap >= 0.0) || !(spec.overlap < 1.0)) {
    throw invalid_input_error("overlap must be in [0, 1)");
  }
  if (width < spec.window_size) {
    throw invalid_input_error("fewer segments than one window");
  }
  if (!(rate > 0.0) || !(rate < 1.0)) {
    throw invalid_input_error("recurrence rate must be in (0, 1)");
  }
  if (l_min < 1) {
    throw invalid_input_error("l_min must be >= 1");
  }
  if (start_times.size() != width) {
    throw invalid_input_error("matrix lacks segment start-time metadata");
  }
  const std::size_t s = spec.window_size;
  const std::size_t stride = spec.stride();
  const std::size_t excl =
      static_cast<std::size_t>(std::max(theiler, 1));

  std::vector<DetPoint> out;
  std::vector<double> population;
  population.reserve(s * s / 2);
  for (std::size_t s0 = 0; s0 + s <= width; s0 += stride) {
    DetPoint point;
    double center = 0.0;
    for (std::size_t i = s0; i < s0 + s; ++i) center += start_times[i];
    point.window_center = center / static_cast<double>(s);

    // Window-local threshold at the fixed recurrence rate.
    population.clear();
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = i + excl; j < s; ++j) {
        population.push_back(dist(s0 + i, s0 + j));
      }
    }
    if (!population.empty()) {
      std::sort(population.begin(), population.end());
      std::size_t rank = static_cast<std::size_t>(
          std::ceil(rate * static_cast<double>(population.size())));
      rank = std::min(std::max<std::size_t>(rank, 1), population.size());
      const double eps = population[rank - 1];

      // Diagonal-line statistics straight off the thresholded window.
      double num = 0.0;
      double den = 0.0;
      for (std::size_t off = excl; off < s; ++off) {
        std::size_t run = 0;
        for (std::size_t i = 0; i + off < s; ++i) {
          if (dist(s0 + i, s0 + i + off) <= eps) {
            ++run;
          } else if (run > 0) {
            den += static_cast<double>(run);
            if (run >= l_min) num += static_cast<double>(run);
            run = 0;
          }
        }
        if (run > 0) {
          den += static_cast<double>(run);
          if (run >= l_min) num += static_cast<double>(run);
        }
      }
      if (den > 0.0) point.det = num / den;
    }
    out.push_back(point);
  }
  return out;
}

}  // namespace

std::vector<DetPoint> sliding_window_det(const DistanceMatrix& d,
                                         const WindowSpec& spec, double rate,
                                         std::size_t l_min, int theiler) {
  return sliding_impl(
      d.width, d.start_times,
      [&](std::size_t i, std::size_t j) { return d.at(i, j); }, spec, rate,
      l_min, theiler);
}

std::vector<DetPoint> sliding_window_det(const BandedDistances& d,
                                         const WindowSpec& spec, double rate,
                                         std::size_t l_min, int theiler) {
  if (d.band + 1 < spec.window_size) {
    throw invalid_input_error("band too narrow for the requested window size");
  }
  return sliding_impl(
      d.width, d.start_times,
      [&](std::size_t i, std::size_t j) { return d.at(i, j); }, spec, rate,
      l_min, theiler);
}

}  // namespace mrqa
