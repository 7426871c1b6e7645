#ifndef MRQA_IO_HPP
#define MRQA_IO_HPP

#include <string>
#include <vector>

#include "mrqa/cost_experiments.hpp"
#include "mrqa/medit.hpp"
#include "mrqa/recurrence.hpp"
#include "mrqa/series.hpp"
#include "mrqa/surrogates.hpp"

namespace mrqa {

// Locale-independent shortest-round-trip decimal rendering of a double
// (std::to_chars); the single formatter used for all CSV output so re-runs
// are byte-identical.
std::string format_double(double v);

// CSV with mandatory `time,value` header, '.' decimal separator. Rows are
// sorted by time if needed; NaN/inf rows and duplicate timestamps are
// rejected (io_error / invalid_input_error).
IrregularSeries read_series_csv(const std::string& path);
void write_series_csv(const std::string& path, const IrregularSeries& series);

// Dense distance matrix CSV: header row carries segment start times.
void write_distance_matrix_csv(const std::string& path,
                               const DistanceMatrix& d);

// Compact binary: magic "MEDM", u32 version (=1), u32 width, then the
// width*(width-1)/2 upper-triangle doubles (row-major, little-endian).
void write_distance_matrix_medm(const std::string& path,
                                const DistanceMatrix& d);
DistanceMatrix read_distance_matrix_medm(const std::string& path);

// `window_center,det` with empty det field for missing windows.
void write_det_csv(const std::string& path, const std::vector<DetPoint>& det);

// `window_center,det_real,det_q95,ratio` with "nan" for missing entries.
void write_corrected_csv(const std::string& path,
                         const EnsembleDetResult& result);

// Sparse upper-triangle recurrence-point list `i,j` (i < j).
void write_rp_sparse_csv(const std::string& path, const RecurrencePlot& rp);

// Cost matrix with row/column headers carrying grid values; empty cells for
// missing entries.
void write_cost_matrix_csv(const std::string& path,
                           const CostMatrixResult& m);

// Lambda_S optimization curve `lambda_s,ks_statistic`.
void write_lambda_s_curve_csv(const std::string& path,
                              const LambdaSResult& result);

}  // namespace mrqa

#endif  // MRQA_IO_HPP
