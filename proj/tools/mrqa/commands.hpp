#ifndef MRQA_TOOLS_COMMANDS_HPP
#define MRQA_TOOLS_COMMANDS_HPP

#include <stdexcept>

#include "run_config.hpp"

namespace mrqa::cli {

// An output self-check produced out-of-tolerance numbers (distinct from input
// validation so it maps to its own exit code).
class check_failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Each command reads its inputs, writes its outputs plus manifest.json into
// cfg.output_dir, and reports progress as one-line logs on stderr. cfg.seed
// must be resolved (engaged) before the call.
void cmd_generate(RunConfig& cfg);
void cmd_rqa(RunConfig& cfg);
void cmd_surrogate(RunConfig& cfg);
void cmd_correct(RunConfig& cfg);
void cmd_oracle(RunConfig& cfg);

}  // namespace mrqa::cli

#endif  // MRQA_TOOLS_COMMANDS_HPP
