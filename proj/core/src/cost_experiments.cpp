#include "mrqa/cost_experiments.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "mrqa/errors.hpp"
#include "mrqa/parallel.hpp"
#include "mrqa/rng.hpp"
#include "mrqa/special_functions.hpp"

namespace mrqa {

CostMatrixResult deletion_cost_matrix(const std::vector<double>& rates,
                                      double lambda_s, DeletionMode mode) {
  if (rates.empty()) {
    throw invalid_input_error("deletion cost matrix needs a rate grid");
  }
  for (double r : rates) {
    if (!(r > 0.0)) {
      throw invalid_input_error("rates must be positive");
    }
  }
  if (!(lambda_s > 0.0)) {
    throw invalid_input_error("lambda_s must be > 0");
  }
  CostMatrixResult m;
  m.row_values = rates;
  m.col_values = rates;
  m.mode = mode == DeletionMode::point_estimate ? "point_estimate" : "expected";
  m.cells.resize(rates.size() * rates.size());
  for (std::size_t r = 0; r < rates.size(); ++r) {
    for (std::size_t c = 0; c < rates.size(); ++c) {
      m.at(r, c) = mode == DeletionMode::point_estimate
                       ? lambda_s * std::abs(rates[r] - rates[c])
                       : expected_deletion_cost(rates[r], rates[c], lambda_s);
    }
  }
  return m;
}

namespace {

struct SegmentPool {
  // buckets[n] = all pooled segments of size n (1..max_size).
  std::vector<std::vector<Segment>> buckets;
};

SegmentPool build_pool(const ShiftExperimentConfig& cfg) {
  if (cfg.family_grid.empty()) {
    throw invalid_input_error("shifting experiment needs a family grid");
  }
  if (!(cfg.total_period > 0.0) || !(cfg.window_duration > 0.0) ||
      !(cfg.mean_interval > 0.0)) {
    throw invalid_input_error("shifting experiment needs positive geometry");
  }
  if (cfg.max_size < 2) {
    throw invalid_input_error("max_size must be >= 2");
  }
  SegmentPool pool;
  pool.buckets.resize(cfg.max_size + 1);
  const SegmentationConfig seg_cfg{cfg.window_duration, 0.0};
  for (std::size_t s = 0; s < cfg.family_grid.size(); ++s) {
    const std::uint64_t axis_seed = derive_seed(cfg.seed, 2 * s);
    const std::uint64_t model_seed = derive_seed(cfg.seed, 2 * s + 1);
    std::vector<double> axis;
    if (cfg.family == AxisFamily::exponential_rate) {
      const double rate = cfg.family_grid[s];
      if (!(rate > 0.0)) {
        throw invalid_input_error("exponential rates must be positive");
      }
      // Exponential intervals = gamma with skewness 2 (shape 1), scale 1/rate.
      axis = generate_gamma_axis(
          {2.0, 1.0 / rate, cfg.total_period, axis_seed});
    } else {
      const double skewness = cfg.family_grid[s];
      if (!(skewness > 0.0)) {
        throw invalid_input_error("gamma skewnesses must be positive");
      }
      const double shape = std::sqrt(2.0 / skewness);
      axis = generate_gamma_axis(
          {skewness, cfg.mean_interval / shape, cfg.total_period, axis_seed});
    }
    if (axis.size() < 2) continue;

    IrregularSeries series;
    if (cfg.events_mode) {
      series.times = axis;
      series.values.assign(axis.size(), 0.0);  // amplitudes ignored
    } else {
      series = generate_model(cfg.system, axis, cfg.model_params, model_seed);
    }
    for (Segment& seg : segment(series, seg_cfg)) {
      const std::size_t n = seg.size();
      if (n >= 1 && n <= cfg.max_size) {
        pool.buckets[n].push_back(std::move(seg));
      }
    }
  }
  return pool;
}

}  // namespace

ShiftExperimentResult shifting_cost_experiment(
    const ShiftExperimentConfig& cfg) {
  if (cfg.replications < 1) {
    throw invalid_input_error("shifting experiment needs replications >= 1");
  }
  const SegmentPool pool = build_pool(cfg);

  std::vector<double> sizes;
  for (std::size_t n = 1; n <= cfg.max_size; ++n) {
    sizes.push_back(static_cast<double>(n));
  }
  auto make_result = [&](const char* mode) {
    CostMatrixResult m;
    m.row_values = sizes;
    m.col_values = sizes;
    m.replications = cfg.replications;
    m.mode = mode;
    m.cells.resize(sizes.size() * sizes.size());
    return m;
  };
  ShiftExperimentResult result{make_result("total"),
                               make_result("per_operation")};

  CostParams full_params;
  full_params.lambda_0 = cfg.lambda_0;
  full_params.lambda_k = cfg.lambda_k;
  full_params.lambda_s = cfg.lambda_s;
  full_params.tau = cfg.tau;

  const std::size_t n_cells = sizes.size() * sizes.size();
  parallel_for(n_cells, cfg.threads, [&](std::size_t cell) {
    const std::size_t na = cell / sizes.size() + 1;
    const std::size_t nb = cell % sizes.size() + 1;
    const std::vector<Segment>& bucket_a = pool.buckets[na];
    const std::vector<Segment>& bucket_b = pool.buckets[nb];
    if (bucket_a.empty() || bucket_b.empty()) return;  // missing cell
    Rng rng(derive_seed(cfg.seed, 0x10000 + cell));
    double total_sum = 0.0;
    double per_op_sum = 0.0;
    for (std::size_t r = 0; r < cfg.replications; ++r) {
      const Segment& a = bucket_a[rng.uniform_index(bucket_a.size())];
      const Segment& b = bucket_b[rng.uniform_index(bucket_b.size())];
      const double d =
          cfg.events_mode
              ? edit_distance_events(a, b, cfg.lambda_0, cfg.lambda_s,
                                     cfg.normalize_to_unit,
                                     cfg.window_duration)
              : edit_distance(a, b, full_params);
      total_sum += d;
      const double basic =
          cfg.lambda_s * std::abs(static_cast<double>(na) -
                                  static_cast<double>(nb));
      per_op_sum += (d - basic) / static_cast<double>(std::max(na, nb));
    }
    const double denom = static_cast<double>(cfg.replications);
    result.total.cells[cell] = total_sum / denom;
    result.per_operation.cells[cell] = per_op_sum / denom;
  });
  return result;
}

}  // namespace mrqa
