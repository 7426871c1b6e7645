#ifndef MRQA_COST_EXPERIMENTS_HPP
#define MRQA_COST_EXPERIMENTS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mrqa/medit.hpp"
#include "mrqa/series.hpp"

namespace mrqa {

// Grid of cell values indexed by rates (lambda1, lambda2) or segment sizes
// (N_a, N_b). Cells with no data (size bucket empty) are missing.
struct CostMatrixResult {
  std::vector<double> row_values;
  std::vector<double> col_values;
  std::vector<std::optional<double>> cells;  // row-major
  std::size_t replications = 0;
  std::string mode;

  std::optional<double>& at(std::size_t r, std::size_t c) {
    return cells[r * col_values.size() + c];
  }
  const std::optional<double>& at(std::size_t r, std::size_t c) const {
    return cells[r * col_values.size() + c];
  }
};

enum class DeletionMode {
  point_estimate,  // lambda_s * |lambda1 - lambda2|
  expected         // lambda_s * E|X - Y|, X~Pois(lambda1), Y~Pois(lambda2)
};

// Analytical deletion-cost matrix over a grid of sampling rates.
CostMatrixResult deletion_cost_matrix(const std::vector<double>& rates,
                                      double lambda_s, DeletionMode mode);

// Family of sampling-interval distributions the superpopulation's axes are
// drawn from: exponential intervals at rate lambda (one rate per series) or
// gamma intervals of skewness Gamma with the scale chosen so every series has
// the same configured mean interval.
enum class AxisFamily { exponential_rate, gamma_skewness };

struct ShiftExperimentConfig {
  AxisFamily family = AxisFamily::gamma_skewness;
  std::vector<double> family_grid;  // per-series lambda or Gamma values
  double mean_interval = 0.2;       // gamma family: Theta = mean / k
  double total_period = 10000.0;    // axis length per series
  double window_duration = 1.0;

  std::size_t replications = 100;   // segment pairs sampled per (N_a, N_b)
  std::size_t max_size = 20;        // cells cover N in [1, max_size]

  // Cost model. events_mode uses the linear-shift event distance (amplitudes
  // ignored, rel_times optionally normalized to [0,1)); otherwise the full
  // modified edit distance with model-system amplitudes.
  bool events_mode = false;
  bool normalize_to_unit = true;
  double lambda_0 = 1.0;
  double lambda_k = 1.0;
  double lambda_s = 1.0;
  double tau = 0.2;
  ModelSystem system = ModelSystem::uniform;
  ModelParams model_params;

  std::uint64_t seed = 0;
  int threads = 1;
};

struct ShiftExperimentResult {
  CostMatrixResult total;          // mean transformation cost C(N_a, N_b)
  CostMatrixResult per_operation;  // mean (C - lambda_s |N_a-N_b|)/max(N_a,N_b)
};

// Generates a superpopulation of seeded series (one axis parameter per grid
// entry), pools their segments by size, samples `replications` segment pairs
// with replacement per (N_a, N_b) cell, and reports averaged total and
// per-shifting-operation costs (basic deletions subtracted in the latter).
ShiftExperimentResult shifting_cost_experiment(
    const ShiftExperimentConfig& cfg);

}  // namespace mrqa

#endif  // MRQA_COST_EXPERIMENTS_HPP
