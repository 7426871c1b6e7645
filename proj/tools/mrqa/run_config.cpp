#include "run_config.hpp"

#include <fstream>

#include "mrqa/errors.hpp"
#include "mrqa/version.hpp"

namespace mrqa::cli {

namespace {

void put_opt(nlohmann::json& j, const char* key,
             const std::optional<double>& v) {
  if (v) j[key] = *v;
}

}  // namespace

nlohmann::json config_to_json(const RunConfig& cfg,
                              const std::string& subcommand) {
  nlohmann::json j;
  if (cfg.seed) j["seed"] = *cfg.seed;
  j["threads"] = cfg.threads;

  const bool gen = subcommand == "generate";
  const bool rqa = subcommand == "rqa";
  const bool sur = subcommand == "surrogate";
  const bool cor = subcommand == "correct";
  const bool ora = subcommand == "oracle";

  if (rqa || sur || cor) j["input"] = cfg.input_path;

  if (gen) {
    j["preset"] = cfg.preset;
    j["system"] = cfg.system;
    j["gamma-skew"] = cfg.gamma_skew;
    put_opt(j, "gamma-scale", cfg.gamma_scale);
    j["mean-interval"] = cfg.mean_interval;
    j["T"] = cfg.total_period;
    put_opt(j, "tau", cfg.tau);
    j["frequency"] = cfg.frequency;
    j["noise-amplitude"] = cfg.noise_amplitude;
    put_opt(j, "change-time", cfg.change_time);
    j["gamma-skew-post"] = cfg.gamma_skew_post;
    j["ramp"] = cfg.ramp;
    j["tau-start"] = cfg.tau_start;
    j["tau-end"] = cfg.tau_end;
  }

  if (rqa || sur || cor) {
    j["window-duration"] = cfg.window_duration;
    j["origin"] = cfg.origin;
  }

  if (rqa || cor) {
    put_opt(j, "detrend-bandwidth", cfg.detrend_bandwidth);
    if (cfg.downsample_stride) j["downsample-stride"] = *cfg.downsample_stride;
    j["lambda-0"] = cfg.lambda_0;
    put_opt(j, "lambda-k", cfg.lambda_k);
    put_opt(j, "lambda-s", cfg.lambda_s);
    put_opt(j, "tau", cfg.tau);
    j["lambda-s-grid"] = cfg.lambda_s_grid;
    j["optimizer-segment-cap"] = cfg.optimizer_segment_cap;
    j["rate"] = cfg.rate;
    j["l-min"] = cfg.l_min;
    j["theiler"] = cfg.theiler;
    j["window-size"] = cfg.window_size;
    j["overlap"] = cfg.overlap;
  }

  if (rqa) {
    j["banded"] = cfg.banded;
    j["matrix-format"] = cfg.matrix_format;
  }

  if (sur || cor) {
    j["ensemble-size"] = cfg.ensemble_size;
    j["alpha-0"] = cfg.alpha_0;
    j["beta"] = cfg.beta;
    j["delta-alpha"] = cfg.delta_alpha;
    j["max-iterations"] = cfg.max_iterations;
    j["reanchor"] = cfg.reanchor;
  }

  if (cor) {
    j["per-surrogate-lambda-s"] = cfg.per_surrogate_lambda_s;
    put_opt(j, "lambda-s-real", cfg.lambda_s_real);
    put_opt(j, "lambda-s-surrogate", cfg.lambda_s_surrogate);
    j["no-ensemble-export"] = cfg.no_ensemble_export;
  }

  if (ora) {
    j["deletion"] = cfg.oracle_deletion;
    j["skellam-check"] = cfg.oracle_skellam;
    j["fig2"] = cfg.oracle_fig2;
    if (!cfg.rates.empty()) j["rates"] = cfg.rates;
    j["deletion-mode"] = cfg.deletion_mode;
    j["mc-draws"] = cfg.mc_draws;
    j["k-max"] = cfg.k_max;
    j["family"] = cfg.family;
    if (!cfg.family_grid.empty()) j["family-grid"] = cfg.family_grid;
    j["replications"] = cfg.replications;
    j["max-size"] = cfg.max_size;
    j["events"] = cfg.events;
    j["system"] = cfg.system;
    j["T"] = cfg.total_period;
    j["mean-interval"] = cfg.mean_interval;
    j["window-duration"] = cfg.window_duration;
    j["lambda-0"] = cfg.lambda_0;
    put_opt(j, "lambda-k", cfg.lambda_k);
    put_opt(j, "lambda-s", cfg.lambda_s);
    put_opt(j, "tau", cfg.tau);
    put_opt(j, "ar1-tau", cfg.ar1_tau);
    j["frequency"] = cfg.frequency;
    j["noise-amplitude"] = cfg.noise_amplitude;
  }

  return j;
}

void apply_json_config(const nlohmann::json& j, RunConfig& cfg,
                       const std::string& subcommand) {
  if (!j.is_object()) {
    throw invalid_input_error("config root must be a JSON object");
  }
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "subcommand") {
        const auto written = value.get<std::string>();
        if (written != subcommand) {
          throw invalid_input_error("config was written for subcommand '" +
                                    written + "' but '" + subcommand +
                                    "' was invoked");
        }
      } else if (key == "tool-version" || key == "resolved") {
        // Manifest metadata, not configuration.
      } else if (key == "seed") {
        cfg.seed = value.get<std::uint64_t>();
      } else if (key == "threads") {
        cfg.threads = value.get<int>();
      } else if (key == "input") {
        cfg.input_path = value.get<std::string>();
      } else if (key == "preset") {
        cfg.preset = value.get<std::string>();
      } else if (key == "system") {
        cfg.system = value.get<std::string>();
      } else if (key == "gamma-skew") {
        cfg.gamma_skew = value.get<double>();
      } else if (key == "gamma-scale") {
        cfg.gamma_scale = value.get<double>();
      } else if (key == "mean-interval") {
        cfg.mean_interval = value.get<double>();
      } else if (key == "T") {
        cfg.total_period = value.get<double>();
      } else if (key == "tau") {
        cfg.tau = value.get<double>();
      } else if (key == "frequency") {
        cfg.frequency = value.get<double>();
      } else if (key == "noise-amplitude") {
        cfg.noise_amplitude = value.get<double>();
      } else if (key == "change-time") {
        cfg.change_time = value.get<double>();
      } else if (key == "gamma-skew-post") {
        cfg.gamma_skew_post = value.get<double>();
      } else if (key == "ramp") {
        cfg.ramp = value.get<bool>();
      } else if (key == "tau-start") {
        cfg.tau_start = value.get<double>();
      } else if (key == "tau-end") {
        cfg.tau_end = value.get<double>();
      } else if (key == "window-duration") {
        cfg.window_duration = value.get<double>();
      } else if (key == "origin") {
        cfg.origin = value.get<double>();
      } else if (key == "detrend-bandwidth") {
        cfg.detrend_bandwidth = value.get<double>();
      } else if (key == "downsample-stride") {
        cfg.downsample_stride = value.get<std::uint64_t>();
      } else if (key == "lambda-0") {
        cfg.lambda_0 = value.get<double>();
      } else if (key == "lambda-k") {
        cfg.lambda_k = value.get<double>();
      } else if (key == "lambda-s") {
        cfg.lambda_s = value.get<double>();
      } else if (key == "lambda-s-grid") {
        cfg.lambda_s_grid = value.get<std::string>();
      } else if (key == "optimizer-segment-cap") {
        cfg.optimizer_segment_cap = value.get<std::uint64_t>();
      } else if (key == "rate") {
        cfg.rate = value.get<double>();
      } else if (key == "l-min") {
        cfg.l_min = value.get<std::uint64_t>();
      } else if (key == "theiler") {
        cfg.theiler = value.get<int>();
      } else if (key == "window-size") {
        cfg.window_size = value.get<std::uint64_t>();
      } else if (key == "overlap") {
        cfg.overlap = value.get<double>();
      } else if (key == "banded") {
        cfg.banded = value.get<bool>();
      } else if (key == "matrix-format") {
        cfg.matrix_format = value.get<std::string>();
      } else if (key == "ensemble-size") {
        cfg.ensemble_size = value.get<std::uint64_t>();
      } else if (key == "alpha-0") {
        cfg.alpha_0 = value.get<double>();
      } else if (key == "beta") {
        cfg.beta = value.get<double>();
      } else if (key == "delta-alpha") {
        cfg.delta_alpha = value.get<double>();
      } else if (key == "max-iterations") {
        cfg.max_iterations = value.get<int>();
      } else if (key == "reanchor") {
        cfg.reanchor = value.get<bool>();
      } else if (key == "per-surrogate-lambda-s") {
        cfg.per_surrogate_lambda_s = value.get<bool>();
      } else if (key == "lambda-s-real") {
        cfg.lambda_s_real = value.get<double>();
      } else if (key == "lambda-s-surrogate") {
        cfg.lambda_s_surrogate = value.get<double>();
      } else if (key == "no-ensemble-export") {
        cfg.no_ensemble_export = value.get<bool>();
      } else if (key == "deletion") {
        cfg.oracle_deletion = value.get<bool>();
      } else if (key == "skellam-check") {
        cfg.oracle_skellam = value.get<bool>();
      } else if (key == "fig2") {
        cfg.oracle_fig2 = value.get<bool>();
      } else if (key == "rates") {
        cfg.rates = value.get<std::string>();
      } else if (key == "deletion-mode") {
        cfg.deletion_mode = value.get<std::string>();
      } else if (key == "mc-draws") {
        cfg.mc_draws = value.get<std::uint64_t>();
      } else if (key == "k-max") {
        cfg.k_max = value.get<int>();
      } else if (key == "family") {
        cfg.family = value.get<std::string>();
      } else if (key == "family-grid") {
        cfg.family_grid = value.get<std::string>();
      } else if (key == "replications") {
        cfg.replications = value.get<std::uint64_t>();
      } else if (key == "max-size") {
        cfg.max_size = value.get<std::uint64_t>();
      } else if (key == "events") {
        cfg.events = value.get<bool>();
      } else if (key == "ar1-tau") {
        cfg.ar1_tau = value.get<double>();
      } else {
        throw invalid_input_error("unknown config key: " + key);
      }
    } catch (const nlohmann::json::exception& e) {
      throw invalid_input_error("config key '" + key + "': " + e.what());
    }
  }
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw invalid_input_error("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_manifest(const RunConfig& cfg, const std::string& subcommand,
                    const nlohmann::json& resolved) {
  nlohmann::json j = config_to_json(cfg, subcommand);
  j["subcommand"] = subcommand;
  j["tool-version"] = k_version;
  if (!resolved.empty()) j["resolved"] = resolved;

  const std::string path = cfg.output_dir + "/manifest.json";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open for writing: " + path);
  out << j.dump(2) << '\n';
  if (!out) throw io_error("write failed: " + path);
}

}  // namespace mrqa::cli
