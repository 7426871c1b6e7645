#include "mrqa/medit.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

#include "mrqa/errors.hpp"
#include "mrqa/parallel.hpp"
#include "mrqa/stats.hpp"

namespace mrqa {

double logistic_shift_cost(double dt, double tau, double lambda_0) {
  if (!(dt >= 0.0)) {
    throw invalid_input_error("shift offset must be >= 0");
  }
  if (!(tau > 0.0)) {
    throw invalid_input_error("logistic location tau must be > 0");
  }
  return lambda_0 / (1.0 + std::exp(-(dt - tau)));
}

double estimate_lambda_k(const IrregularSeries& series) {
  validate_series(series);
  double denom = 0.0;
  for (std::size_t i = 1; i < series.size(); ++i) {
    denom += std::abs(series.values[i] - series.values[i - 1]);
  }
  if (denom == 0.0) {
    throw degenerate_input_error(
        "constant series: amplitude cost rate is undefined");
  }
  return static_cast<double>(series.size() - 1) / denom;
}

namespace {

void check_cost_params(const CostParams& p) {
  if (!(p.lambda_0 >= 0.0) || !(p.lambda_k >= 0.0) || !(p.lambda_s > 0.0) ||
      !(p.tau > 0.0) || !std::isfinite(p.lambda_0) ||
      !std::isfinite(p.lambda_k) || !std::isfinite(p.lambda_s) ||
      !std::isfinite(p.tau)) {
    throw invalid_input_error("invalid cost parameters");
  }
}

// Needleman–Wunsch-style alignment over order-preserving matchings with
// per-sample deletion/adding cost lambda_s and a caller-supplied matched-pair
// cost. Two rolling rows; O(N_a N_b) time, O(N_b) space.
template <typename PairCost>
double align(std::size_t na, std::size_t nb, double lambda_s,
             PairCost&& pair_cost) {
  std::vector<double> prev(nb + 1), curr(nb + 1);
  for (std::size_t j = 0; j <= nb; ++j) {
    prev[j] = static_cast<double>(j) * lambda_s;
  }
  for (std::size_t i = 1; i <= na; ++i) {
    curr[0] = static_cast<double>(i) * lambda_s;
    for (std::size_t j = 1; j <= nb; ++j) {
      const double del = prev[j] + lambda_s;
      const double add = curr[j - 1] + lambda_s;
      const double match = prev[j - 1] + pair_cost(i - 1, j - 1);
      curr[j] = std::min(std::min(del, add), match);
    }
    std::swap(prev, curr);
  }
  return prev[nb];
}

}  // namespace

double edit_distance(const Segment& a, const Segment& b, const CostParams& p) {
  check_cost_params(p);
  return align(a.size(), b.size(), p.lambda_s,
               [&](std::size_t i, std::size_t j) {
                 const double dt = std::abs(a.rel_times[i] - b.rel_times[j]);
                 return p.lambda_0 / (1.0 + std::exp(-(dt - p.tau))) +
                        p.lambda_k * std::abs(a.amplitudes[i] - b.amplitudes[j]);
               });
}

double edit_distance_events(const Segment& a, const Segment& b,
                            double lambda_0, double lambda_s,
                            bool normalize_to_unit, double window_duration) {
  if (!(lambda_0 >= 0.0) || !(lambda_s > 0.0)) {
    throw invalid_input_error("invalid event-distance cost parameters");
  }
  if (!(window_duration > 0.0)) {
    throw invalid_input_error("window duration must be > 0");
  }
  const double scale = normalize_to_unit ? 1.0 / window_duration : 1.0;
  return align(a.size(), b.size(), lambda_s,
               [&](std::size_t i, std::size_t j) {
                 return lambda_0 * scale *
                        std::abs(a.rel_times[i] - b.rel_times[j]);
               });
}

double forced_matching_shift_cost(const Segment& a, const Segment& b,
                                  double lambda_0, bool normalize_to_unit,
                                  double window_duration) {
  if (!(lambda_0 >= 0.0)) {
    throw invalid_input_error("lambda_0 must be >= 0");
  }
  if (!(window_duration > 0.0)) {
    throw invalid_input_error("window duration must be > 0");
  }
  const double scale = normalize_to_unit ? 1.0 / window_duration : 1.0;
  // Orient so segment `s` is the smaller one; every s-sample must be matched,
  // the larger side absorbs the |N_a - N_b| basic deletions.
  const Segment& s = a.size() <= b.size() ? a : b;
  const Segment& l = a.size() <= b.size() ? b : a;
  const std::size_t ns = s.size();
  const std::size_t nl = l.size();
  if (ns == 0) return 0.0;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> prev(nl + 1, 0.0), curr(nl + 1, inf);
  for (std::size_t i = 1; i <= ns; ++i) {
    curr[0] = inf;  // i unmatched smaller samples are not allowed
    for (std::size_t j = 1; j <= nl; ++j) {
      const double skip = curr[j - 1];
      const double match =
          prev[j - 1] +
          lambda_0 * scale * std::abs(s.rel_times[i - 1] - l.rel_times[j - 1]);
      curr[j] = std::min(skip, match);
    }
    std::swap(prev, curr);
  }
  return prev[nl];
}

DistanceMatrix distance_matrix(const std::vector<Segment>& segments,
                               const CostParams& p, int threads) {
  if (segments.size() < 2) {
    throw invalid_input_error("distance matrix needs at least 2 segments");
  }
  check_cost_params(p);
  const std::size_t w = segments.size();
  DistanceMatrix d;
  d.width = w;
  d.data.assign(w * w, 0.0);
  d.start_times.resize(w);
  for (std::size_t i = 0; i < w; ++i) d.start_times[i] = segments[i].start_time;
  // One parallel work item per row of the (strict) upper triangle.
  parallel_for(w, threads, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < w; ++j) {
      const double v = edit_distance(segments[i], segments[j], p);
      d.at(i, j) = v;
      d.at(j, i) = v;
    }
  });
  return d;
}

BandedDistances banded_distance_matrix(const std::vector<Segment>& segments,
                                       const CostParams& p, std::size_t band,
                                       int threads) {
  if (segments.size() < 2) {
    throw invalid_input_error("distance matrix needs at least 2 segments");
  }
  if (band < 1) {
    throw invalid_input_error("band must be >= 1");
  }
  check_cost_params(p);
  const std::size_t w = segments.size();
  BandedDistances d;
  d.width = w;
  d.band = std::min(band, w - 1);
  d.data.assign(w * (d.band + 1), 0.0);
  d.start_times.resize(w);
  for (std::size_t i = 0; i < w; ++i) d.start_times[i] = segments[i].start_time;
  parallel_for(w, threads, [&](std::size_t i) {
    const std::size_t jmax = std::min(w - 1, i + d.band);
    for (std::size_t j = i + 1; j <= jmax; ++j) {
      d.data[i * (d.band + 1) + (j - i)] =
          edit_distance(segments[i], segments[j], p);
    }
  });
  return d;
}

LambdaSResult optimize_lambda_s(const std::vector<Segment>& segments,
                                const CostParams& base, const LambdaSGrid& grid,
                                int threads) {
  if (segments.size() < 10) {
    throw invalid_input_error(
        "lambda_s optimization needs at least 10 segments");
  }
  if (!(grid.lo > 0.0) || !(grid.step > 0.0) || grid.hi < grid.lo) {
    throw invalid_input_error("invalid lambda_s grid");
  }
  LambdaSResult result;
  for (double v = grid.lo; v <= grid.hi + 1e-12 * grid.step;
       v += grid.step) {
    result.grid.push_back(v);
  }
  const std::size_t w = segments.size();
  const std::size_t n_pairs = w * (w - 1) / 2;
  result.ks.resize(result.grid.size());

  for (std::size_t g = 0; g < result.grid.size(); ++g) {
    CostParams p = base;
    p.lambda_s = result.grid[g];
    check_cost_params(p);
    std::vector<double> dist(n_pairs);
    // Row-offset table so each (i, j) pair owns one slot.
    std::vector<std::size_t> offset(w, 0);
    for (std::size_t i = 1; i < w; ++i) {
      offset[i] = offset[i - 1] + (w - i);
    }
    parallel_for(w - 1, threads, [&](std::size_t i) {
      std::size_t slot = offset[i];
      for (std::size_t j = i + 1; j < w; ++j, ++slot) {
        dist[slot] = edit_distance(segments[i], segments[j], p);
      }
    });
    const double m = mean_of(dist);
    const double sd = stddev_of(dist);
    // Relative threshold: a population of identical distances can acquire a
    // ~1e-16 spread purely from summation rounding in the mean.
    if (!(sd > m * 1e-12)) {
      throw degenerate_input_error(
          "distance population has zero variance; lambda_s KS objective "
          "undefined");
    }
    for (double& x : dist) x = (x - m) / sd;
    result.ks[g] = ks_statistic_normal(dist);
  }
  std::size_t best = 0;
  for (std::size_t g = 1; g < result.ks.size(); ++g) {
    if (result.ks[g] < result.ks[best]) best = g;
  }
  result.lambda_s_opt = result.grid[best];
  return result;
}

}  // namespace mrqa
