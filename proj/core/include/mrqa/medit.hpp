#ifndef MRQA_MEDIT_HPP
#define MRQA_MEDIT_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "mrqa/series.hpp"

namespace mrqa {

// Full parameterization of the modified edit distance:
//   shift cost    f(dt) = lambda_0 / (1 + exp(-(dt - tau)))   (logistic)
//   amplitude     lambda_k * |L_a - L_b| per matched pair
//   delete/add    lambda_s per unmatched sample
struct CostParams {
  double lambda_0 = 1.0;  // max shifting cost, >= 0
  double lambda_k = 1.0;  // amplitude cost rate, >= 0
  double lambda_s = 1.0;  // deletion/adding cost, > 0
  double tau = 1.0;       // logistic location (time units), > 0
};

// Logistic shifting cost of a time offset dt >= 0. Saturates at lambda_0 for
// dt >> tau; equals lambda_0/2 at dt == tau. Note f(0) > 0.
double logistic_shift_cost(double dt, double tau, double lambda_0);

// Amplitude cost rate from the series' mean absolute successive difference:
// (M-1) / sum |x_i - x_{i+1}|. Throws degenerate_input_error for constant
// series (zero denominator).
double estimate_lambda_k(const IrregularSeries& series);

// Minimum transformation cost between two segments over all order-preserving
// matchings C:
//   sum_{(a,b) in C} [f(|t_a - t_b|) + lambda_k |L_a - L_b|]
//     + lambda_s (N_a + N_b - 2|C|)
// computed by alignment dynamic programming. Segments compare via their
// window-relative times. Empty vs empty -> 0.
double edit_distance(const Segment& a, const Segment& b, const CostParams& p);

// Event-timing variant with *linear* shift cost lambda_0 * |t_a - t_b| and
// amplitudes ignored; optionally rescales rel_times by 1/window_duration so
// both segments live on [0, 1). This is the cost model of the analytical
// deletion/shifting oracles.
double edit_distance_events(const Segment& a, const Segment& b,
                            double lambda_0, double lambda_s,
                            bool normalize_to_unit,
                            double window_duration = 1.0);

// Minimum total *linear* shift cost over forced maximal matchings (all
// min(N_a, N_b) samples of the smaller segment matched; only the |N_a - N_b|
// basic deletions allowed). Used to check that allowing deletions as
// competing operations never increases the cost. Returns the bare shift sum
// (no lambda_s term).
double forced_matching_shift_cost(const Segment& a, const Segment& b,
                                  double lambda_0, bool normalize_to_unit,
                                  double window_duration = 1.0);

// Symmetric pairwise distance matrix with zero diagonal.
struct DistanceMatrix {
  std::size_t width = 0;
  std::vector<double> data;         // width*width, row-major
  std::vector<double> start_times;  // per-segment metadata (may be empty)

  double at(std::size_t i, std::size_t j) const {
    return data[i * width + j];
  }
  double& at(std::size_t i, std::size_t j) { return data[i * width + j]; }
};

// Dense distance matrix over all segment pairs; upper triangle computed
// (optionally in parallel) and mirrored, diagonal exactly 0.
DistanceMatrix distance_matrix(const std::vector<Segment>& segments,
                               const CostParams& p, int threads = 1);

// Banded storage holding distances only for |i - j| <= band. Sufficient for
// sliding-window analyses with window size <= band + 1 at a fraction of the
// dense cost; layout is row i -> offsets 0..band.
struct BandedDistances {
  std::size_t width = 0;
  std::size_t band = 0;
  std::vector<double> data;         // width*(band+1)
  std::vector<double> start_times;

  bool has(std::size_t i, std::size_t j) const {
    return (i <= j ? j - i : i - j) <= band;
  }
  double at(std::size_t i, std::size_t j) const {
    if (j < i) std::swap(i, j);
    return data[i * (band + 1) + (j - i)];
  }
};

BandedDistances banded_distance_matrix(const std::vector<Segment>& segments,
                                       const CostParams& p, std::size_t band,
                                       int threads = 1);

struct LambdaSGrid {
  double lo = 0.1;
  double hi = 10.0;
  double step = 0.1;
};

struct LambdaSResult {
  double lambda_s_opt = 0.0;
  std::vector<double> grid;  // candidate lambda_s values
  std::vector<double> ks;    // one-sample KS statistic vs N(0,1) per candidate
};

// Scans the grid; for each candidate lambda_s computes all upper-triangle
// pairwise distances of the given segments, standardizes them by their sample
// mean/std, and evaluates the one-sample KS statistic against the standard
// normal CDF. Returns the minimizer (first on ties) and the full curve.
// Requires >= 10 segments; throws degenerate_input_error when the distance
// population has zero variance.
LambdaSResult optimize_lambda_s(const std::vector<Segment>& segments,
                                const CostParams& base, const LambdaSGrid& grid,
                                int threads = 1);

}  // namespace mrqa

#endif  // MRQA_MEDIT_HPP
