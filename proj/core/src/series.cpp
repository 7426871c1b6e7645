#include "mrqa/series.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>

#include "mrqa/errors.hpp"
#include "mrqa/rng.hpp"

namespace mrqa {

void validate_series(const IrregularSeries& series) {
  const std::size_t m = series.times.size();
  if (m < 2) {
    throw invalid_input_error("series needs at least 2 samples");
  }
  if (series.values.size() != m) {
    throw invalid_input_error("times/values length mismatch");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::isfinite(series.times[i]) || !std::isfinite(series.values[i])) {
      throw invalid_input_error("non-finite sample");
    }
    if (i > 0 && !(series.times[i] > series.times[i - 1])) {
      throw invalid_input_error("timestamps must be strictly increasing");
    }
  }
}

double mean_interval(const IrregularSeries& series) {
  validate_series(series);
  return (series.times.back() - series.times.front()) /
         static_cast<double>(series.size() - 1);
}

std::vector<Segment> segment(const IrregularSeries& series,
                             const SegmentationConfig& cfg) {
  validate_series(series);
  if (!(cfg.window_duration > 0.0)) {
    throw invalid_input_error("window duration must be > 0");
  }
  if (cfg.origin > series.times.front()) {
    throw invalid_input_error("segmentation origin must not exceed the first timestamp");
  }
  const double w = cfg.window_duration;

  // Half-open binning [start, start + w); normalize against floating-point
  // edge rounding so every rel_time lands in [0, w).
  auto window_of = [&](double t) {
    auto idx = static_cast<long long>(std::floor((t - cfg.origin) / w));
    if (idx < 0) idx = 0;
    double rel = t - (cfg.origin + static_cast<double>(idx) * w);
    while (rel >= w) {
      ++idx;
      rel = t - (cfg.origin + static_cast<double>(idx) * w);
    }
    while (rel < 0.0) {
      --idx;
      rel = t - (cfg.origin + static_cast<double>(idx) * w);
    }
    return std::pair<std::size_t, double>(static_cast<std::size_t>(idx), rel);
  };

  const std::size_t n_windows = window_of(series.times.back()).first + 1;
  std::vector<Segment> segments(n_windows);
  for (std::size_t i = 0; i < n_windows; ++i) {
    segments[i].index = i;
    segments[i].start_time = cfg.origin + static_cast<double>(i) * w;
  }
  for (std::size_t s = 0; s < series.size(); ++s) {
    const auto [idx, rel] = window_of(series.times[s]);
    segments[idx].rel_times.push_back(rel);
    segments[idx].amplitudes.push_back(series.values[s]);
  }
  return segments;
}

IrregularSeries concatenate_segments(const std::vector<Segment>& segments) {
  IrregularSeries out;
  for (const Segment& s : segments) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      out.times.push_back(s.start_time + s.rel_times[i]);
      out.values.push_back(s.amplitudes[i]);
    }
  }
  return out;
}

std::vector<double> generate_gamma_axis(const GammaAxisConfig& cfg) {
  if (!(cfg.skewness > 0.0) || !(cfg.scale > 0.0) || !(cfg.total_period > 0.0)) {
    throw invalid_input_error("gamma axis requires positive skewness, scale, period");
  }
  const double shape = std::sqrt(2.0 / cfg.skewness);
  Rng rng(cfg.seed);
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(
      cfg.total_period / (shape * cfg.scale) * 1.1) + 16);
  double t = 0.0;
  for (;;) {
    t += rng.gamma(shape, cfg.scale);
    if (t >= cfg.total_period) break;
    times.push_back(t);
  }
  return times;
}

std::vector<double> generate_rate_shift_axis(const RateShiftAxisConfig& cfg) {
  if (!(cfg.total_period > 0.0) || !(cfg.scale > 0.0) ||
      !(cfg.skewness_pre > 0.0) || !(cfg.skewness_post > 0.0)) {
    throw invalid_input_error("rate-shift axis requires positive parameters");
  }
  if (cfg.change_time < 0.0 || cfg.change_time > cfg.total_period) {
    throw invalid_input_error("change time must lie within [0, total_period]");
  }
  const double shape_pre = std::sqrt(2.0 / cfg.skewness_pre);
  const double shape_post = std::sqrt(2.0 / cfg.skewness_post);
  Rng rng(cfg.seed);
  std::vector<double> times;
  double t = 0.0;
  for (;;) {
    const double shape = t < cfg.change_time ? shape_pre : shape_post;
    t += rng.gamma(shape, cfg.scale);
    if (t >= cfg.total_period) break;
    times.push_back(t);
  }
  return times;
}

IrregularSeries generate_model(ModelSystem system,
                               const std::vector<double>& axis,
                               const ModelParams& params, std::uint64_t seed) {
  if (axis.size() < 2) {
    throw invalid_input_error("model axis needs at least 2 timestamps");
  }
  for (std::size_t i = 1; i < axis.size(); ++i) {
    if (!(axis[i] > axis[i - 1])) {
      throw invalid_input_error("model axis must be strictly increasing");
    }
  }
  IrregularSeries out;
  out.times = axis;
  out.values.resize(axis.size());
  Rng rng(seed);
  switch (system) {
    case ModelSystem::uniform:
      for (double& v : out.values) v = rng.uniform();
      break;
    case ModelSystem::ar1: {
      if (!(params.tau > 0.0)) {
        throw invalid_input_error("ar1 requires tau > 0");
      }
      double x = rng.normal();
      out.values[0] = x;
      for (std::size_t i = 1; i < axis.size(); ++i) {
        const double phi = std::exp(-(axis[i] - axis[i - 1]) / params.tau);
        x = phi * x + std::sqrt(1.0 - phi * phi) * rng.normal();
        out.values[i] = x;
      }
      break;
    }
    case ModelSystem::sinusoid: {
      const double two_pi = 2.0 * 3.14159265358979323846;
      for (std::size_t i = 0; i < axis.size(); ++i) {
        out.values[i] = std::sin(two_pi * params.frequency * axis[i]) +
                        params.noise_amplitude * rng.normal();
      }
      break;
    }
    default:
      throw invalid_input_error("unknown model system");
  }
  return out;
}

IrregularSeries generate_ar1_rampsignal(double total_period, double tau_start,
                                        double tau_end,
                                        const std::vector<double>& axis,
                                        std::uint64_t seed,
                                        double ramp_start_time) {
  if (!(total_period > 0.0)) {
    throw invalid_input_error("ramp signal requires total_period > 0");
  }
  if (!(tau_start > 0.0) || !(tau_end > 0.0) || tau_start > tau_end) {
    throw invalid_input_error("ramp requires 0 < tau_start <= tau_end");
  }
  if (!(ramp_start_time >= 0.0) || !std::isfinite(ramp_start_time)) {
    throw invalid_input_error("ramp_start_time must be finite and >= 0");
  }
  if (axis.size() < 2) {
    throw invalid_input_error("ramp axis needs at least 2 timestamps");
  }
  auto tau_at = [&](double t) {
    if (t <= ramp_start_time || ramp_start_time >= total_period) {
      return tau_start;
    }
    const double f = std::clamp(
        (t - ramp_start_time) / (total_period - ramp_start_time), 0.0, 1.0);
    return tau_start + (tau_end - tau_start) * f;
  };
  IrregularSeries out;
  out.times = axis;
  out.values.resize(axis.size());
  Rng rng(seed);
  double x = rng.normal();
  out.values[0] = x;
  for (std::size_t i = 1; i < axis.size(); ++i) {
    const double dt = axis[i] - axis[i - 1];
    if (!(dt > 0.0)) {
      throw invalid_input_error("ramp axis must be strictly increasing");
    }
    const double phi = std::exp(-dt / tau_at(axis[i]));
    x = phi * x + std::sqrt(1.0 - phi * phi) * rng.normal();
    out.values[i] = x;
  }
  return out;
}

IrregularSeries gaussian_detrend(const IrregularSeries& series,
                                 double bandwidth) {
  validate_series(series);
  if (!(bandwidth > 0.0)) {
    throw invalid_input_error("detrend bandwidth must be > 0");
  }
  const std::size_t m = series.size();
  const double cutoff = 3.0 * bandwidth;  // kernel mass beyond 3h < e^{-4.5}
  IrregularSeries out = series;
  std::size_t lo = 0;
  std::size_t hi = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double t = series.times[i];
    while (lo < m && series.times[lo] < t - cutoff) ++lo;
    if (hi < lo) hi = lo;
    while (hi < m && series.times[hi] <= t + cutoff) ++hi;
    double wsum = 0.0;
    double xsum = 0.0;
    for (std::size_t j = lo; j < hi; ++j) {
      const double u = (series.times[j] - t) / bandwidth;
      const double k = std::exp(-0.5 * u * u);
      wsum += k;
      xsum += k * series.values[j];
    }
    out.values[i] = series.values[i] - xsum / wsum;  // wsum >= kernel(0) > 0
  }
  return out;
}

IrregularSeries downsample_uniform(const IrregularSeries& series,
                                   std::size_t stride) {
  validate_series(series);
  if (stride < 1) {
    throw invalid_input_error("downsampling stride must be >= 1");
  }
  IrregularSeries out;
  out.time_unit = series.time_unit;
  out.value_unit = series.value_unit;
  for (std::size_t i = 0; i < series.size(); i += stride) {
    out.times.push_back(series.times[i]);
    out.values.push_back(series.values[i]);
  }
  return out;
}

}  // namespace mrqa
