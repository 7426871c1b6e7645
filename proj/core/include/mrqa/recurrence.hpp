#ifndef MRQA_RECURRENCE_HPP
#define MRQA_RECURRENCE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mrqa/medit.hpp"

namespace mrqa {

// Binary recurrence matrix R[i][j] = (D[i][j] <= epsilon), symmetric with
// unit main diagonal (LOI). theiler records the exclusion zone used when the
// threshold was derived: pairs with |i - j| < max(1, theiler) are omitted
// from quantile populations and line statistics.
struct RecurrencePlot {
  std::size_t width = 0;
  std::vector<std::uint8_t> r;  // width*width, row-major
  double epsilon = 0.0;
  double target_rate = 0.0;
  int theiler = 1;

  bool at(std::size_t i, std::size_t j) const {
    return r[i * width + j] != 0;
  }
};

// Chooses epsilon as the nearest-rank `rate`-quantile of the off-Theiler
// distance population, then thresholds the full matrix. rate in (0,1).
RecurrencePlot threshold_by_rate(const DistanceMatrix& d, double rate,
                                 int theiler = 1);

// counts[l] = P(l) = number of maximal diagonal runs of length l, both matrix
// triangles counted (a full off-LOI diagonal pair contributes 2). Index 0 of
// counts is unused; valid lengths are 1..width-1.
struct DiagonalHistogram {
  std::vector<std::size_t> counts;
  std::size_t width = 0;
  int theiler = 1;

  std::size_t p(std::size_t l) const {
    return l < counts.size() ? counts[l] : 0;
  }
};

// Counts maximal runs of recurrences along every diagonal with offset
// |i - j| >= max(1, theiler); runs are bounded by zeros or matrix edges.
DiagonalHistogram diagonal_histogram(const RecurrencePlot& rp);

// DET = sum_{l >= l_min} l P(l) / sum_{l >= 1} l P(l), in [0, 1].
// Throws undefined_det_error when the histogram holds no recurrence points
// (the distinct "missing DET" condition), invalid_input_error for l_min < 1.
double det(const DiagonalHistogram& hist, std::size_t l_min = 2);

// Sliding analysis geometry: windows of `window_size` consecutive segments,
// advanced by stride = round(window_size * (1 - overlap)), at least 1.
struct WindowSpec {
  std::size_t window_size = 200;
  double overlap = 0.75;

  std::size_t stride() const;
};

struct DetPoint {
  double window_center = 0.0;        // mean start time of member segments
  std::optional<double> det;         // empty = undefined within this window
};

// For each window position, re-thresholds the window's submatrix at the fixed
// recurrence rate and computes DET. Windows with no off-LOI recurrences
// yield a missing value. Requires width >= window_size and start_times
// metadata on the matrix.
std::vector<DetPoint> sliding_window_det(const DistanceMatrix& d,
                                         const WindowSpec& spec, double rate,
                                         std::size_t l_min, int theiler = 1);

// Same analysis reading from banded storage (band must be >= window_size-1).
std::vector<DetPoint> sliding_window_det(const BandedDistances& d,
                                         const WindowSpec& spec, double rate,
                                         std::size_t l_min, int theiler = 1);

}  // namespace mrqa

#endif  // MRQA_RECURRENCE_HPP
