#ifndef MRQA_SURROGATES_HPP
#define MRQA_SURROGATES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mrqa/medit.hpp"
#include "mrqa/recurrence.hpp"
#include "mrqa/series.hpp"

namespace mrqa {

// One consecutive (sampling interval, amplitude difference) observation; the
// atoms the constrained randomization draws from, always jointly.
struct IntervalAmplitudePair {
  double delta = 0.0;  // t_{i+1} - t_i, > 0
  double dy = 0.0;     // x_{i+1} - x_i
};

// All M-1 consecutive pairs of the series, sorted ascending by delta. The
// element at ascending position q (0-based, population size P) is weighted at
// abscissa x = 1 - (q + 0.5)/P, i.e. rank 1 = longest interval, so that
// increasing alpha in Beta(alpha, 1) favors short intervals.
std::vector<IntervalAmplitudePair> build_pair_population(
    const IrregularSeries& series);

// Redraw schedule of the constrained randomization: the l-th failed iteration
// raises the Beta shape to alpha_0 + l * delta_alpha (favoring ever shorter
// intervals) and redraws the whole segment.
struct WeightConfig {
  double alpha_0 = 1.0;      // >= 1
  double beta = 1.0;         // >= 1
  double delta_alpha = 0.15; // > 0
  int max_iterations = 1000; // N_it^max
};

// One accepted surrogate segment: cumulated relative times (all < w), the
// drawn amplitude differences (pair-partners of the drawn intervals), and the
// number of iterations used (1 = first draw accepted; 0 = empty segment).
struct SegmentDraw {
  std::vector<double> rel_times;
  std::vector<double> dys;
  int iterations = 0;
};

// Draws n (interval, dy) pairs with replacement, weighted by the Beta density
// at each pair's abscissa, until the cumulated intervals stay inside the
// window duration w; escalates alpha per failed iteration. Throws
// convergence_error (segment index = npos) after max_iterations failures.
SegmentDraw generate_segment_surrogate(
    std::size_t n, double window_duration,
    const std::vector<IntervalAmplitudePair>& population,
    const WeightConfig& wcfg, std::uint64_t seed);

struct SrcOptions {
  // Restart the cumulated amplitude path at each segment from the real
  // segment's first amplitude instead of cumulating across the whole record.
  bool reanchor_amplitudes = false;
};

// Full sampling-rate-constrained surrogate: per real segment, a surrogate
// segment of identical size anchored at the real segment's start time;
// amplitudes cumulated from the real first value across the whole record.
IrregularSeries generate_src_surrogate(const IrregularSeries& series,
                                       const SegmentationConfig& cfg,
                                       const WeightConfig& wcfg,
                                       std::uint64_t seed,
                                       const SrcOptions& options = {});

// Surrogate plus per-segment iteration counts (for ensemble diagnostics).
struct SrcSurrogateResult {
  IrregularSeries series;
  std::vector<int> iterations;
};

SrcSurrogateResult generate_src_surrogate_ex(const IrregularSeries& series,
                                             const SegmentationConfig& cfg,
                                             const WeightConfig& wcfg,
                                             std::uint64_t seed,
                                             const SrcOptions& options = {});

// Everything the bias-corrected sliding DET analysis needs.
struct EnsembleConfig {
  std::size_t ensemble_size = 200;  // K >= 2 (1 allowed for smoke tests)
  SegmentationConfig segmentation;
  WeightConfig weights;
  SrcOptions surrogate_options;

  // Cost model. Unset optionals are derived: tau from the real series' mean
  // interval; lambda_s values by KS optimization over lambda_s_grid.
  double lambda_0 = 1.0;
  double lambda_k = 1.0;
  std::optional<double> tau;
  std::optional<double> lambda_s_real;
  std::optional<double> lambda_s_surrogate;
  LambdaSGrid lambda_s_grid;
  std::size_t optimizer_segment_cap = 250;  // evenly-strided subsample cap
  bool per_surrogate_lambda_s = false;      // re-optimize for every surrogate

  // Recurrence side.
  double recurrence_rate = 0.15;
  std::size_t l_min = 2;
  int theiler = 1;
  WindowSpec window;

  int threads = 1;
};

struct EnsembleDetResult {
  std::vector<double> window_center;
  std::vector<std::optional<double>> det_real;
  std::vector<std::optional<double>> det_q95;  // upper 95% surrogate quantile
  std::vector<std::optional<double>> ratio;    // det_real / det_q95

  double lambda_s_real = 0.0;
  double lambda_s_surrogate = 0.0;
  double tau = 0.0;
  std::size_t ensemble_size = 0;
  int max_iterations_used = 0;    // worst segment redraw count seen
  double mean_iterations = 0.0;   // mean over all segments and surrogates
};

// Generates K seeded SRC surrogates (seed_k = derive_seed(seed, k)), runs the
// sliding-window DET on the real series and every surrogate (lambda_s
// estimated separately for real vs surrogate data), and per window reports
// the real DET, the 95% upper empirical quantile over surrogate DETs
// (nearest-rank, missing values excluded), and the corrected ratio. A window
// missing in the real series is missing in all three outputs.
EnsembleDetResult ensemble_det(const IrregularSeries& series,
                               const EnsembleConfig& cfg, std::uint64_t seed);

}  // namespace mrqa

#endif  // MRQA_SURROGATES_HPP
