#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "limitlab/config.hpp"

namespace limitlab {

struct RunOptions {
  std::optional<std::string> out_dir;  // overrides config "output_dir"
  std::optional<std::uint64_t> seed;   // overrides config "seed" and random text seeds
};

/// Exit codes: 0 ran (whatever the verdict), 2 malformed config, 3 domain
/// or validation error raised by a module, 4 I/O failure.
enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitDomain = 3, kExitIo = 4 };

struct RunOutcome {
  int exit_code = kExitOk;
  std::string report;                  // also written to report.txt
  std::vector<std::string> artifacts;  // paths written
  std::string error;                   // diagnostic when exit_code != 0
};

/// Reads, validates and executes one JSON config. Writes config.json (the
/// normalized echo), report.txt and the experiment's CSV into the output
/// directory. Artifacts depend only on the config and seed.
RunOutcome run_config(const std::string& path, const RunOptions& options = {});

/// Same, for an already-parsed config.
RunOutcome run_experiment(ExperimentConfig config, const RunOptions& options = {});

/// Catalog of learners, metrics, text kinds, chain kinds and experiments
/// with their parameter schemas.
std::string list_builtins();

}  // namespace limitlab
