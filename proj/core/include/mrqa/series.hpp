#ifndef MRQA_SERIES_HPP
#define MRQA_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mrqa {

// Irregularly sampled univariate time series: strictly increasing timestamps
// paired with real amplitudes. The fundamental input of every analysis.
struct IrregularSeries {
  std::vector<double> times;
  std::vector<double> values;
  std::string time_unit;   // free-text metadata, e.g. "years"
  std::string value_unit;  // free-text metadata

  std::size_t size() const noexcept { return times.size(); }
};

// Throws invalid_input_error unless times are strictly increasing, finite,
// paired 1:1 with finite values, and M >= 2.
void validate_series(const IrregularSeries& series);

// Exact sample mean of the sampling intervals (t_M - t_1)/(M - 1); the
// default "temporal tolerance" tau of the logistic shifting cost.
double mean_interval(const IrregularSeries& series);

// One fixed-duration window's worth of samples. rel_times are offsets from
// start_time, sorted ascending, each in [0, w). size may be 0.
struct Segment {
  std::size_t index = 0;
  double start_time = 0.0;
  std::vector<double> rel_times;
  std::vector<double> amplitudes;

  std::size_t size() const noexcept { return rel_times.size(); }
};

struct SegmentationConfig {
  double window_duration = 1.0;  // w > 0
  double origin = 0.0;           // left edge of the first window
};

// Tiles [origin, origin + n*w) with half-open windows [start, start + w) and
// bins every sample into exactly one window. Empty segments are retained in
// order. Requires origin <= times.front().
std::vector<Segment> segment(const IrregularSeries& series,
                             const SegmentationConfig& cfg);

// Reassembles absolute times/values from segments (start_time + rel_times).
// Inverse of segment() up to floating-point addition round-trip.
IrregularSeries concatenate_segments(const std::vector<Segment>& segments);

// Gamma-distributed sampling intervals parameterized by their skewness:
// shape k = sqrt(2/Gamma), so Gamma = 2 gives exponential intervals.
struct GammaAxisConfig {
  double skewness = 1.0;      // Gamma > 0
  double scale = 1.0;         // Theta > 0; mean interval = k * Theta
  double total_period = 0.0;  // T > 0
  std::uint64_t seed = 0;
};

// Cumulative sum of i.i.d. gamma(k, Theta) draws truncated at T (all returned
// times < T; the time origin 0 itself is not a sample).
std::vector<double> generate_gamma_axis(const GammaAxisConfig& cfg);

enum class ModelSystem { uniform, ar1, sinusoid };

struct ModelParams {
  double tau = 5.0;              // AR(1) autocorrelation time
  double frequency = 1.0 / 25.0; // sinusoid frequency nu
  double noise_amplitude = 0.1;  // sinusoid additive Gaussian noise
};

// Evaluates one of the three model systems on the given irregular axis:
//   uniform  — i.i.d. U(0,1)
//   ar1      — continuous-time AR(1): x_{i+1} = phi x_i + sqrt(1-phi^2) xi,
//              phi = exp(-Delta_i / tau), unit stationary variance
//   sinusoid — sin(2 pi nu t_i) + noise_amplitude * N(0,1)
IrregularSeries generate_model(ModelSystem system,
                               const std::vector<double>& axis,
                               const ModelParams& params, std::uint64_t seed);

// Gamma axis whose skewness switches abruptly at change_time (scale Theta is
// held fixed, so the mean sampling rate jumps by k_pre/k_post).
struct RateShiftAxisConfig {
  double total_period = 0.0;
  double change_time = 0.0;
  double skewness_pre = 1.0;
  double skewness_post = 1.0;
  double scale = 1.0;
  std::uint64_t seed = 0;
};

std::vector<double> generate_rate_shift_axis(const RateShiftAxisConfig& cfg);

// AR(1) signal with autocorrelation time ramping linearly from tau_start to
// tau_end at t=total_period, evaluated on an (arbitrary, typically
// rate-shifted) irregular axis. Requires tau_start <= tau_end, both > 0.
// The ramp begins at ramp_start_time (tau is held at tau_start before it);
// ramp_start_time >= total_period yields a constant-tau signal.
IrregularSeries generate_ar1_rampsignal(double total_period, double tau_start,
                                        double tau_end,
                                        const std::vector<double>& axis,
                                        std::uint64_t seed,
                                        double ramp_start_time = 0.0);

// Subtracts a Nadaraya–Watson Gaussian-kernel smooth (bandwidth in time
// units, kernel truncated at 3 bandwidths) evaluated at every sample time.
IrregularSeries gaussian_detrend(const IrregularSeries& series,
                                 double bandwidth);

// Keeps samples 0, stride, 2*stride, ...; preserves the relative
// sampling-rate profile. stride >= 1.
IrregularSeries downsample_uniform(const IrregularSeries& series,
                                   std::size_t stride);

}  // namespace mrqa

#endif  // MRQA_SERIES_HPP
