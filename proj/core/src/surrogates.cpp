#include "mrqa/surrogates.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "mrqa/errors.hpp"
#include "mrqa/parallel.hpp"
#include "mrqa/rng.hpp"
#include "mrqa/stats.hpp"

namespace mrqa {

std::vector<IntervalAmplitudePair> build_pair_population(
    const IrregularSeries& series) {
  validate_series(series);
  std::vector<IntervalAmplitudePair> population;
  population.reserve(series.size() - 1);
  for (std::size_t i = 1; i < series.size(); ++i) {
    population.push_back({series.times[i] - series.times[i - 1],
                          series.values[i] - series.values[i - 1]});
  }
  std::sort(population.begin(), population.end(),
            [](const IntervalAmplitudePair& a, const IntervalAmplitudePair& b) {
              return a.delta < b.delta;
            });
  return population;
}

namespace {

void check_weight_config(const WeightConfig& wcfg) {
  if (!(wcfg.alpha_0 >= 1.0) || !(wcfg.beta >= 1.0)) {
    throw invalid_input_error("weight config requires alpha_0 >= 1, beta >= 1");
  }
  if (!(wcfg.delta_alpha > 0.0)) {
    throw invalid_input_error("weight config requires delta_alpha > 0");
  }
  if (wcfg.max_iterations < 1) {
    throw invalid_input_error("weight config requires max_iterations >= 1");
  }
}

// Acceptance for condition (7): cumulated time must stay inside the window.
// The boundary itself is rejected (measure-zero tightening) so re-segmenting
// an accepted surrogate can never move a sample across a window edge.
bool accepted(double cumulated, double w) {
  return cumulated < w * (1.0 - 1e-12);
}

// Weighted-with-replacement sampler over the pair population. The element at
// ascending-delta position q is weighted by the Beta(alpha_l, beta) density
// at abscissa x_q = 1 - (q + 0.5)/P (rank 1 = longest interval), so raising
// alpha shifts mass toward short intervals. Cumulative weight tables are
// cached per escalation level l.
class PairSampler {
 public:
  PairSampler(const std::vector<IntervalAmplitudePair>& population,
              const WeightConfig& wcfg)
      : population_(population), wcfg_(wcfg) {
    if (population_.empty()) {
      throw invalid_input_error("empty pair population");
    }
    for (const IntervalAmplitudePair& p : population_) {
      if (!(p.delta > 0.0)) {
        throw invalid_input_error("pair population requires positive deltas");
      }
    }
  }

  std::size_t draw(int level, Rng& rng) {
    const std::vector<double>& cdf = table(level);
    const double u = rng.uniform() * cdf.back();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
    if (idx >= cdf.size()) idx = cdf.size() - 1;
    return idx;
  }

  const IntervalAmplitudePair& pair(std::size_t idx) const {
    return population_[idx];
  }

 private:
  const std::vector<double>& table(int level) {
    while (tables_.size() <= static_cast<std::size_t>(level)) {
      const double alpha =
          wcfg_.alpha_0 + static_cast<double>(tables_.size()) * wcfg_.delta_alpha;
      const std::size_t p = population_.size();
      std::vector<double> cdf(p);
      const double log_norm = std::lgamma(alpha + wcfg_.beta) -
                              std::lgamma(alpha) - std::lgamma(wcfg_.beta);
      double acc = 0.0;
      for (std::size_t q = 0; q < p; ++q) {
        const double x =
            1.0 - (static_cast<double>(q) + 0.5) / static_cast<double>(p);
        const double log_pdf = log_norm + (alpha - 1.0) * std::log(x) +
                               (wcfg_.beta - 1.0) * std::log1p(-x);
        acc += std::exp(log_pdf);
        cdf[q] = acc;
      }
      tables_.push_back(std::move(cdf));
    }
    return tables_[static_cast<std::size_t>(level)];
  }

  const std::vector<IntervalAmplitudePair>& population_;
  WeightConfig wcfg_;
  std::vector<std::vector<double>> tables_;
};

SegmentDraw draw_segment(std::size_t n, double w, PairSampler& sampler,
                         const WeightConfig& wcfg, Rng& rng,
                         std::size_t segment_index) {
  SegmentDraw out;
  if (n == 0) {
    out.iterations = 0;
    return out;
  }
  std::vector<std::size_t> indices(n);
  for (int it = 0; it < wcfg.max_iterations; ++it) {
    double cumulated = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      indices[k] = sampler.draw(it, rng);
      cumulated += sampler.pair(indices[k]).delta;
    }
    if (accepted(cumulated, w)) {
      out.rel_times.resize(n);
      out.dys.resize(n);
      double t = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const IntervalAmplitudePair& p = sampler.pair(indices[k]);
        t += p.delta;
        out.rel_times[k] = t;
        out.dys[k] = p.dy;
      }
      out.iterations = it + 1;
      return out;
    }
  }
  throw convergence_error(
      "surrogate segment redraw exceeded max_iterations", segment_index);
}

}  // namespace

SegmentDraw generate_segment_surrogate(
    std::size_t n, double window_duration,
    const std::vector<IntervalAmplitudePair>& population,
    const WeightConfig& wcfg, std::uint64_t seed) {
  if (!(window_duration > 0.0)) {
    throw invalid_input_error("window duration must be > 0");
  }
  check_weight_config(wcfg);
  PairSampler sampler(population, wcfg);
  Rng rng(seed);
  return draw_segment(n, window_duration, sampler, wcfg, rng,
                      convergence_error::npos);
}

namespace {

SrcSurrogateResult build_src_surrogate(const IrregularSeries& series,
                                       const SegmentationConfig& cfg,
                                       const WeightConfig& wcfg,
                                       std::uint64_t seed,
                                       const SrcOptions& options) {
  check_weight_config(wcfg);
  const std::vector<Segment> segments = segment(series, cfg);
  const std::vector<IntervalAmplitudePair> population =
      build_pair_population(series);
  PairSampler sampler(population, wcfg);
  Rng rng(seed);

  SrcSurrogateResult result;
  result.series.time_unit = series.time_unit;
  result.series.value_unit = series.value_unit;
  result.series.times.reserve(series.size());
  result.series.values.reserve(series.size());
  result.iterations.reserve(segments.size());

  double y = series.values.front();
  for (const Segment& seg : segments) {
    const SegmentDraw draw = draw_segment(seg.size(), cfg.window_duration,
                                          sampler, wcfg, rng, seg.index);
    result.iterations.push_back(draw.iterations);
    if (options.reanchor_amplitudes && seg.size() > 0) {
      y = seg.amplitudes.front();
    }
    for (std::size_t k = 0; k < draw.rel_times.size(); ++k) {
      result.series.times.push_back(seg.start_time + draw.rel_times[k]);
      y += draw.dys[k];
      result.series.values.push_back(y);
    }
  }
  assert(result.series.size() == series.size());
  return result;
}

}  // namespace

IrregularSeries generate_src_surrogate(const IrregularSeries& series,
                                       const SegmentationConfig& cfg,
                                       const WeightConfig& wcfg,
                                       std::uint64_t seed,
                                       const SrcOptions& options) {
  return build_src_surrogate(series, cfg, wcfg, seed, options).series;
}

SrcSurrogateResult generate_src_surrogate_ex(const IrregularSeries& series,
                                             const SegmentationConfig& cfg,
                                             const WeightConfig& wcfg,
                                             std::uint64_t seed,
                                             const SrcOptions& options) {
  return build_src_surrogate(series, cfg, wcfg, seed, options);
}

namespace {

// Evenly strided subsample of at most `cap` segments for the lambda_s
// optimizer (the KS objective is O(grid * W^2) in the segment count).
std::vector<Segment> subsample_segments(const std::vector<Segment>& segments,
                                        std::size_t cap) {
  if (cap == 0 || segments.size() <= cap) return segments;
  std::vector<Segment> out;
  out.reserve(cap);
  for (std::size_t k = 0; k < cap; ++k) {
    out.push_back(segments[k * segments.size() / cap]);
  }
  return out;
}

double resolve_lambda_s(const std::vector<Segment>& segments,
                        const EnsembleConfig& cfg, double tau) {
  CostParams base;
  base.lambda_0 = cfg.lambda_0;
  base.lambda_k = cfg.lambda_k;
  base.tau = tau;
  const std::vector<Segment> sub =
      subsample_segments(segments, cfg.optimizer_segment_cap);
  return optimize_lambda_s(sub, base, cfg.lambda_s_grid, cfg.threads)
      .lambda_s_opt;
}

std::vector<DetPoint> analyze(const std::vector<Segment>& segments,
                              const EnsembleConfig& cfg, double tau,
                              double lambda_s) {
  CostParams p;
  p.lambda_0 = cfg.lambda_0;
  p.lambda_k = cfg.lambda_k;
  p.lambda_s = lambda_s;
  p.tau = tau;
  const BandedDistances d = banded_distance_matrix(
      segments, p, cfg.window.window_size, cfg.threads);
  return sliding_window_det(d, cfg.window, cfg.recurrence_rate, cfg.l_min,
                            cfg.theiler);
}

}  // namespace

EnsembleDetResult ensemble_det(const IrregularSeries& series,
                               const EnsembleConfig& cfg, std::uint64_t seed) {
  validate_series(series);
  if (cfg.ensemble_size < 1) {
    throw invalid_input_error("ensemble needs at least 1 surrogate");
  }
  const double tau = cfg.tau.value_or(mean_interval(series));

  EnsembleDetResult result;
  result.ensemble_size = cfg.ensemble_size;
  result.tau = tau;

  // Real-series pass.
  const std::vector<Segment> real_segments = segment(series, cfg.segmentation);
  result.lambda_s_real = cfg.lambda_s_real.has_value()
                             ? *cfg.lambda_s_real
                             : resolve_lambda_s(real_segments, cfg, tau);
  const std::vector<DetPoint> det_real =
      analyze(real_segments, cfg, tau, result.lambda_s_real);
  const std::size_t n_windows = det_real.size();
  result.window_center.resize(n_windows);
  result.det_real.resize(n_windows);
  for (std::size_t i = 0; i < n_windows; ++i) {
    result.window_center[i] = det_real[i].window_center;
    result.det_real[i] = det_real[i].det;
  }

  // Surrogate passes. The pilot realization (index 0) is generated first so
  // its segments can seed the family-wide lambda_s estimate.
  long long iteration_sum = 0;
  std::size_t iteration_count = 0;
  int iteration_max = 0;
  std::vector<std::vector<std::optional<double>>> surrogate_det(
      cfg.ensemble_size);

  double lambda_s_surr = 0.0;
  for (std::size_t k = 0; k < cfg.ensemble_size; ++k) {
    const SrcSurrogateResult surr = generate_src_surrogate_ex(
        series, cfg.segmentation, cfg.weights, derive_seed(seed, k),
        cfg.surrogate_options);
    for (int it : surr.iterations) {
      iteration_sum += it;
      iteration_max = std::max(iteration_max, it);
    }
    iteration_count += surr.iterations.size();

    const std::vector<Segment> surr_segments =
        segment(surr.series, cfg.segmentation);
    if (k == 0) {
      lambda_s_surr = cfg.lambda_s_surrogate.has_value()
                          ? *cfg.lambda_s_surrogate
                          : resolve_lambda_s(surr_segments, cfg, tau);
    }
    const double ls = cfg.per_surrogate_lambda_s && k > 0
                          ? resolve_lambda_s(surr_segments, cfg, tau)
                          : lambda_s_surr;
    const std::vector<DetPoint> points = analyze(surr_segments, cfg, tau, ls);
    if (points.size() != n_windows) {
      throw degenerate_input_error(
          "surrogate window count differs from the real series");
    }
    surrogate_det[k].resize(n_windows);
    for (std::size_t i = 0; i < n_windows; ++i) {
      surrogate_det[k][i] = points[i].det;
    }
  }
  result.lambda_s_surrogate = lambda_s_surr;
  result.max_iterations_used = iteration_max;
  result.mean_iterations =
      iteration_count == 0
          ? 0.0
          : static_cast<double>(iteration_sum) /
                static_cast<double>(iteration_count);

  // Per-window upper 95% quantile over the surrogate ensemble and the
  // corrected ratio. Missing surrogate windows are excluded; a window missing
  // in the real series (or with no surrogate data / zero quantile) stays
  // missing everywhere.
  result.det_q95.resize(n_windows);
  result.ratio.resize(n_windows);
  std::vector<double> pool;
  pool.reserve(cfg.ensemble_size);
  for (std::size_t i = 0; i < n_windows; ++i) {
    if (!result.det_real[i].has_value()) continue;  // undefined everywhere
    pool.clear();
    for (std::size_t k = 0; k < cfg.ensemble_size; ++k) {
      if (surrogate_det[k][i].has_value()) pool.push_back(*surrogate_det[k][i]);
    }
    if (!pool.empty()) {
      result.det_q95[i] = quantile_nearest_rank(pool, 0.95);
    }
    if (result.det_q95[i].has_value() && *result.det_q95[i] > 0.0) {
      result.ratio[i] = *result.det_real[i] / *result.det_q95[i];
    }
  }
  return result;
}

}  // namespace mrqa
