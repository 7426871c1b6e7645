#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <memory>
#include <random>
#include <string>

#include "CLI11.hpp"

#include "mrqa/errors.hpp"
#include "mrqa/version.hpp"

#include "commands.hpp"
#include "run_config.hpp"

namespace {

using mrqa::cli::RunConfig;

void add_global_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--config", cfg.config_path,
                  "JSON config file with flat keys mirroring the flags; "
                  "flags given on the command line take precedence");
  cmd->add_option("--seed", cfg.seed,
                  "Root RNG seed (default: drawn from entropy and recorded "
                  "in the manifest)");
  cmd->add_option("--threads", cfg.threads,
                  "Worker thread cap (0 = all hardware threads)");
  cmd->add_option("--output", cfg.output_dir,
                  "Output directory, created if missing (default: .)");
}

void add_input_option(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--input", cfg.input_path,
                  "Input series CSV with a time,value header");
}

void add_segmentation_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--window-duration", cfg.window_duration,
                  "Segmentation window duration w in time units");
  cmd->add_option("--origin", cfg.origin,
                  "Left edge of the first segmentation window");
}

void add_preprocessing_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--detrend-bandwidth", cfg.detrend_bandwidth,
                  "Subtract a Gaussian-kernel smooth with this bandwidth "
                  "before the analysis");
  cmd->add_option("--downsample-stride", cfg.downsample_stride,
                  "Keep every n-th sample before the analysis");
}

void add_cost_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--lambda-0", cfg.lambda_0,
                  "Maximum (saturation) shifting cost");
  cmd->add_option("--lambda-k", cfg.lambda_k,
                  "Amplitude cost rate (default: estimated from the data as "
                  "the inverse mean absolute successive difference)");
  cmd->add_option("--lambda-s", cfg.lambda_s,
                  "Deletion/adding cost (default: KS-optimized over "
                  "--lambda-s-grid)");
  cmd->add_option("--tau", cfg.tau,
                  "Logistic shift-cost location in time units (default: the "
                  "series' mean sampling interval)");
  cmd->add_option("--lambda-s-grid", cfg.lambda_s_grid,
                  "Deletion-cost optimization grid, lo:hi:step");
  cmd->add_option("--optimizer-segment-cap", cfg.optimizer_segment_cap,
                  "Evenly strided subsample cap on the segments fed to the "
                  "lambda_s optimizer (0 = no cap)");
}

void add_recurrence_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--rate", cfg.rate,
                  "Target recurrence rate for thresholding");
  cmd->add_option("--l-min", cfg.l_min,
                  "Minimum diagonal line length counted as determinism");
  cmd->add_option("--theiler", cfg.theiler,
                  "Theiler exclusion: ignore pairs with |i-j| below this");
  cmd->add_option("--window-size", cfg.window_size,
                  "Sliding window size in segments");
  cmd->add_option("--overlap", cfg.overlap,
                  "Sliding window overlap fraction in [0,1)");
}

void add_weight_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--ensemble-size", cfg.ensemble_size,
                  "Number of surrogate realizations K");
  cmd->add_option("--alpha-0", cfg.alpha_0,
                  "Initial Beta shape of the interval-sampling weights");
  cmd->add_option("--beta", cfg.beta, "Beta shape parameter b");
  cmd->add_option("--delta-alpha", cfg.delta_alpha,
                  "Shape increment per failed redraw iteration");
  cmd->add_option("--max-iterations", cfg.max_iterations,
                  "Redraw iteration cap per segment");
  cmd->add_flag("--reanchor,!--no-reanchor", cfg.reanchor,
                "Restart the surrogate amplitude path at every segment's "
                "real first value instead of cumulating across the record");
}

std::unique_ptr<CLI::App> build_app(RunConfig& cfg) {
  auto app = std::make_unique<CLI::App>(
      "Modified edit-distance recurrence analysis for irregularly sampled "
      "time series");
  app->name("mrqa");
  app->set_version_flag("--version", std::string(mrqa::k_version));
  app->require_subcommand(1);

  CLI::App* gen = app->add_subcommand(
      "generate", "Generate a synthetic irregularly sampled series");
  add_global_options(gen, cfg);
  gen->add_option("--preset", cfg.preset,
                  "'reference': sampling-interval skewness jump 1->8 at "
                  "t=1250 (scale 0.2/sqrt(2)) with an AR(1) correlation-time "
                  "ramp 1->10 over T=5000; other generator flags are "
                  "ignored");
  gen->add_option("--system", cfg.system,
                  "Model system: uniform|ar1|sinusoid");
  gen->add_option("--gamma-skew", cfg.gamma_skew,
                  "Skewness parameter of the gamma-distributed sampling "
                  "intervals (2 = exponential)");
  gen->add_option("--gamma-scale", cfg.gamma_scale,
                  "Gamma scale Theta (default: derived from "
                  "--mean-interval)");
  gen->add_option("--mean-interval", cfg.mean_interval,
                  "Target mean sampling interval used to derive Theta when "
                  "--gamma-scale is not given");
  gen->add_option("--T", cfg.total_period, "Total period of the series");
  gen->add_option("--tau", cfg.tau, "AR(1) correlation time");
  gen->add_option("--frequency", cfg.frequency, "Sinusoid frequency");
  gen->add_option("--noise-amplitude", cfg.noise_amplitude,
                  "Sinusoid additive noise amplitude");
  gen->add_option("--change-time", cfg.change_time,
                  "Switch the interval skewness at this time (rate-shift "
                  "axis)");
  gen->add_option("--gamma-skew-post", cfg.gamma_skew_post,
                  "Interval skewness after --change-time");
  gen->add_flag("--ramp,!--no-ramp", cfg.ramp,
                "Ramp the AR(1) correlation time linearly from --tau-start "
                "to --tau-end over the record");
  gen->add_option("--tau-start", cfg.tau_start,
                  "Ramp start correlation time");
  gen->add_option("--tau-end", cfg.tau_end, "Ramp end correlation time");

  CLI::App* rqa = app->add_subcommand(
      "rqa", "Distance matrix and sliding-window determinism of a series");
  add_global_options(rqa, cfg);
  add_input_option(rqa, cfg);
  add_segmentation_options(rqa, cfg);
  add_preprocessing_options(rqa, cfg);
  add_cost_options(rqa, cfg);
  add_recurrence_options(rqa, cfg);
  rqa->add_flag("--banded,!--no-banded", cfg.banded,
                "Compute distances only within the sliding-window band "
                "(skips the dense matrix export)");
  rqa->add_option("--matrix-format", cfg.matrix_format,
                  "Distance matrix export: csv|medm|both|none");

  CLI::App* sur = app->add_subcommand(
      "surrogate", "Export sampling-rate-constrained surrogate realizations");
  add_global_options(sur, cfg);
  add_input_option(sur, cfg);
  add_segmentation_options(sur, cfg);
  add_weight_options(sur, cfg);

  CLI::App* cor = app->add_subcommand(
      "correct",
      "Surrogate-corrected sliding-window determinism of a series");
  add_global_options(cor, cfg);
  add_input_option(cor, cfg);
  add_segmentation_options(cor, cfg);
  add_preprocessing_options(cor, cfg);
  add_cost_options(cor, cfg);
  add_recurrence_options(cor, cfg);
  add_weight_options(cor, cfg);
  cor->add_flag("--per-surrogate-lambda-s,!--no-per-surrogate-lambda-s",
                cfg.per_surrogate_lambda_s,
                "Re-optimize the deletion cost for every surrogate instead "
                "of reusing the first realization's value");
  cor->add_option("--lambda-s-real", cfg.lambda_s_real,
                  "Fixed deletion cost for the real-series analysis");
  cor->add_option("--lambda-s-surrogate", cfg.lambda_s_surrogate,
                  "Fixed deletion cost for the surrogate analyses");
  cor->add_flag("--no-ensemble-export,!--ensemble-export",
                cfg.no_ensemble_export,
                "Skip writing the ensemble/ realization CSVs");

  CLI::App* ora = app->add_subcommand(
      "oracle", "Analytical cost oracles and self-check reports");
  add_global_options(ora, cfg);
  ora->add_flag("--deletion", cfg.oracle_deletion,
                "Deletion-cost matrix over a sampling-rate grid");
  ora->add_flag("--skellam-check", cfg.oracle_skellam,
                "Normalization and Monte Carlo cross-check of the expected "
                "absolute Poisson difference");
  ora->add_flag("--fig2", cfg.oracle_fig2,
                "Averaged segment-pair transformation costs over a "
                "synthetic superpopulation");
  ora->add_option("--rates", cfg.rates,
                  "Rate grid lo:hi:step, lo:hi:xN, or comma list (default: "
                  "0.5:8:0.5 for --deletion, 0.5,1,2,4,8 for "
                  "--skellam-check)");
  ora->add_option("--deletion-mode", cfg.deletion_mode,
                  "Deletion matrix cells: point|expected");
  ora->add_option("--mc-draws", cfg.mc_draws,
                  "Monte Carlo sample size per grid cell");
  ora->add_option("--k-max", cfg.k_max,
                  "Summation cutoff for the distribution checks");
  ora->add_option("--family", cfg.family,
                  "Sampling-interval family for --fig2: gamma|exponential");
  ora->add_option("--family-grid", cfg.family_grid,
                  "Family parameter grid for --fig2 (default: 1:8:x100 for "
                  "gamma, 0.5:8:0.5 for exponential)");
  ora->add_option("--replications", cfg.replications,
                  "Segment pairs sampled per cell for --fig2");
  ora->add_option("--max-size", cfg.max_size,
                  "Largest segment size covered by --fig2");
  ora->add_flag("--events,!--no-events", cfg.events,
                "Use the linear event-timing cost (amplitudes ignored) for "
                "--fig2");
  ora->add_option("--system", cfg.system,
                  "Model system for --fig2: uniform|ar1|sinusoid");
  ora->add_option("--T", cfg.total_period,
                  "Axis length per superpopulation series for --fig2");
  ora->add_option("--mean-interval", cfg.mean_interval,
                  "Mean sampling interval of the gamma family for --fig2");
  ora->add_option("--window-duration", cfg.window_duration,
                  "Segment duration for --fig2");
  ora->add_option("--lambda-0", cfg.lambda_0,
                  "Maximum (saturation or linear-slope) shifting cost");
  ora->add_option("--lambda-k", cfg.lambda_k,
                  "Amplitude cost rate for --fig2 (default 1)");
  ora->add_option("--lambda-s", cfg.lambda_s,
                  "Deletion/adding cost (defaults: 1 for --deletion; the "
                  "per-system optimized value for --fig2)");
  ora->add_option("--tau", cfg.tau,
                  "Logistic shift-cost location for --fig2 (default: the "
                  "configured mean interval)");
  ora->add_option("--ar1-tau", cfg.ar1_tau,
                  "AR(1) correlation time of the --fig2 model system");
  ora->add_option("--frequency", cfg.frequency,
                  "Sinusoid frequency of the --fig2 model system");
  ora->add_option("--noise-amplitude", cfg.noise_amplitude,
                  "Sinusoid noise amplitude of the --fig2 model system");

  return app;
}

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

int dispatch(const std::string& subcommand, RunConfig& cfg) {
  try {
    if (!cfg.seed) cfg.seed = entropy_seed();
    std::filesystem::create_directories(cfg.output_dir);
    if (!cfg.input_path.empty()) {
      cfg.input_path = std::filesystem::absolute(cfg.input_path)
                           .lexically_normal()
                           .string();
    }
    if (subcommand == "generate") {
      mrqa::cli::cmd_generate(cfg);
    } else if (subcommand == "rqa") {
      mrqa::cli::cmd_rqa(cfg);
    } else if (subcommand == "surrogate") {
      mrqa::cli::cmd_surrogate(cfg);
    } else if (subcommand == "correct") {
      mrqa::cli::cmd_correct(cfg);
    } else {
      mrqa::cli::cmd_oracle(cfg);
    }
    return 0;
  } catch (const mrqa::invalid_input_error& e) {
    std::cerr << "mrqa: invalid input: " << e.what() << '\n';
    return 3;
  } catch (const mrqa::degenerate_input_error& e) {
    std::cerr << "mrqa: degenerate input: " << e.what() << '\n';
    return 4;
  } catch (const mrqa::undefined_det_error& e) {
    std::cerr << "mrqa: undefined determinism: " << e.what() << '\n';
    return 5;
  } catch (const mrqa::convergence_error& e) {
    std::cerr << "mrqa: surrogate convergence failure";
    if (e.segment_index() != mrqa::convergence_error::npos) {
      std::cerr << " (segment " << e.segment_index() << ")";
    }
    std::cerr << ": " << e.what() << '\n';
    return 6;
  } catch (const mrqa::io_error& e) {
    std::cerr << "mrqa: io error: " << e.what() << '\n';
    return 7;
  } catch (const mrqa::cli::check_failure& e) {
    std::cerr << "mrqa: output check failed: " << e.what() << '\n';
    return 8;
  } catch (const std::exception& e) {
    std::cerr << "mrqa: error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  // First pass: discover the subcommand and an optional --config path, and
  // let CLI11 handle --help/--version and usage errors.
  RunConfig probe;
  auto probe_app = build_app(probe);
  try {
    probe_app->parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return probe_app->exit(e);
  }
  const std::string subcommand =
      probe_app->get_subcommands().front()->get_name();

  // Second pass over the same argv with config-file values applied first, so
  // explicit flags override the file and the file overrides the defaults.
  RunConfig cfg;
  try {
    if (!probe.config_path.empty()) {
      mrqa::cli::apply_json_config(mrqa::cli::load_json_file(probe.config_path),
                                   cfg, subcommand);
    }
    auto app = build_app(cfg);
    app->parse(argc, argv);
    return dispatch(subcommand, cfg);
  } catch (const mrqa::invalid_input_error& e) {
    std::cerr << "mrqa: invalid input: " << e.what() << '\n';
    return 3;
  } catch (const mrqa::io_error& e) {
    std::cerr << "mrqa: io error: " << e.what() << '\n';
    return 7;
  } catch (const CLI::ParseError& e) {
    std::cerr << "mrqa: argument error: " << e.what() << '\n';
    return 2;
  }
}
