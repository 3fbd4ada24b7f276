#pragma once

#include <filesystem>
#include <iosfwd>

#include "sbo/harness/config.hpp"

namespace sbo::harness {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kConfigError = 2,
  kBlowUp = 3,
  kInfeasible = 4,
  kDegenerateFit = 5,
};

struct RunOptions {
  std::filesystem::path out;
  unsigned threads = 1;
};

/// Runs the experiment, writes its tables, plot data and manifest.json into
/// options.out and returns the exit code. On failure the files written so
/// far are kept and the manifest status is FAILED.
int run_experiment(const ExperimentConfig& config, const RunOptions& options, std::ostream& log);

}  // namespace sbo::harness
