#ifndef MRQA_TOOLS_RUN_CONFIG_HPP
#define MRQA_TOOLS_RUN_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

namespace mrqa::cli {

// One flat bag of options covering every subcommand; each subcommand binds
// (and serializes into its manifest) only the subset it uses. Field defaults
// are the CLI defaults. JSON config keys mirror the long flag names without
// the leading dashes; command-line flags override config-file values, which
// override the defaults.
struct RunConfig {
  // Global.
  std::string config_path;            // --config (never serialized)
  std::string output_dir = ".";       // --output (never serialized)
  std::optional<std::uint64_t> seed;  // --seed; drawn from entropy if omitted
  int threads = 1;                    // --threads (0 = all hardware threads)

  std::string input_path;  // --input

  // generate.
  std::string preset;                 // --preset ("reference")
  std::string system = "ar1";         // --system uniform|ar1|sinusoid
  double gamma_skew = 2.0;            // --gamma-skew (interval skewness)
  std::optional<double> gamma_scale;  // --gamma-scale Theta; else derived
  double mean_interval = 0.2;         // --mean-interval (sets Theta if no
                                      //   explicit --gamma-scale)
  double total_period = 10000.0;      // --T
  std::optional<double> tau;          // --tau: generate = AR(1) correlation
                                      //   time; rqa/correct/oracle = logistic
                                      //   shift-cost location
  double frequency = 1.0 / 25.0;      // --frequency (sinusoid)
  double noise_amplitude = 0.1;       // --noise-amplitude (sinusoid)
  std::optional<double> change_time;  // --change-time (rate-shift axis)
  double gamma_skew_post = 8.0;       // --gamma-skew-post
  bool ramp = false;                  // --ramp (AR(1) correlation-time ramp)
  double tau_start = 1.0;             // --tau-start
  double tau_end = 10.0;              // --tau-end

  // Segmentation and preprocessing.
  double window_duration = 1.0;  // --window-duration
  double origin = 0.0;           // --origin
  std::optional<double> detrend_bandwidth;         // --detrend-bandwidth
  std::optional<std::uint64_t> downsample_stride;  // --downsample-stride

  // Cost model.
  double lambda_0 = 1.0;           // --lambda-0
  std::optional<double> lambda_k;  // --lambda-k; else estimated from the data
  std::optional<double> lambda_s;  // --lambda-s; else KS-optimized
  std::string lambda_s_grid = "0.1:10:0.1";   // --lambda-s-grid lo:hi:step
  std::uint64_t optimizer_segment_cap = 250;  // --optimizer-segment-cap

  // Recurrence analysis.
  double rate = 0.15;                // --rate (target recurrence rate)
  std::uint64_t l_min = 2;           // --l-min
  int theiler = 1;                   // --theiler
  std::uint64_t window_size = 200;   // --window-size (segments per window)
  double overlap = 0.75;             // --overlap
  bool banded = false;               // --banded (rqa only)
  std::string matrix_format = "csv"; // --matrix-format csv|medm|both|none

  // Surrogates.
  std::uint64_t ensemble_size = 200;  // --ensemble-size
  double alpha_0 = 1.0;               // --alpha-0
  double beta = 1.0;                  // --beta
  double delta_alpha = 0.15;          // --delta-alpha
  int max_iterations = 1000;          // --max-iterations
  bool reanchor = false;              // --reanchor
  bool per_surrogate_lambda_s = false;       // --per-surrogate-lambda-s
  std::optional<double> lambda_s_real;       // --lambda-s-real
  std::optional<double> lambda_s_surrogate;  // --lambda-s-surrogate
  bool no_ensemble_export = false;           // --no-ensemble-export

  // oracle.
  bool oracle_deletion = false;       // --deletion
  bool oracle_skellam = false;        // --skellam-check
  bool oracle_fig2 = false;           // --fig2
  std::string rates;                  // --rates; default depends on the mode
  std::string deletion_mode = "expected";  // --deletion-mode point|expected
  std::uint64_t mc_draws = 1000000;   // --mc-draws
  int k_max = 200;                    // --k-max (summation cutoff)
  std::string family = "gamma";       // --family gamma|exponential
  std::string family_grid;            // --family-grid; default per family
  std::uint64_t replications = 100;   // --replications (pairs per cell)
  std::uint64_t max_size = 20;        // --max-size (largest segment size)
  bool events = false;                // --events (linear event-timing cost)
  std::optional<double> ar1_tau;      // --ar1-tau (AR(1) correlation time of
                                      //   the fig2 model system)
};

// Serializes the subcommand-relevant view of the config (resolved seed
// included) as the flat-key JSON object read back by --config.
nlohmann::json config_to_json(const RunConfig& cfg,
                              const std::string& subcommand);

// Applies a flat-key JSON object onto cfg: fields present in the JSON
// overwrite cfg, everything else keeps its current value. A "subcommand" key
// must match the invoked subcommand; "tool-version" and "resolved" are
// skipped as manifest metadata; unknown keys are rejected.
void apply_json_config(const nlohmann::json& j, RunConfig& cfg,
                       const std::string& subcommand);

// Reads and parses a JSON file (io_error on filesystem failure,
// invalid_input_error on malformed JSON).
nlohmann::json load_json_file(const std::string& path);

// Writes <output_dir>/manifest.json: the serialized config plus the tool
// version and a "resolved" block of derived quantities.
void write_manifest(const RunConfig& cfg, const std::string& subcommand,
                    const nlohmann::json& resolved);

}  // namespace mrqa::cli

#endif  // MRQA_TOOLS_RUN_CONFIG_HPP
