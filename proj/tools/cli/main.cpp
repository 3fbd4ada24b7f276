#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sbo/harness/config.hpp"
#include "sbo/harness/experiments.hpp"

namespace {

// Default output root when neither --out nor output.dir is given.
constexpr const char* kOutputRootEnv = "SBO_OUTPUT_ROOT";

}  // namespace

int main(int argc, char** argv) {
  using namespace sbo::harness;

  CLI::App app{"Schrodinger-Benjamin-Ono simulation laboratory"};
  std::string experiment;
  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
  app.add_option("experiment", experiment,
                 "simulate | conserve | imethod-decay | scaling-check | estimate-probe | continuation-plan | "
                 "growth-bounds")
      ->required();
  app.add_option("--config", config_path, "YAML experiment file")->required()->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "output directory (default: $SBO_OUTPUT_ROOT/<experiment> or ./sbo-out/<experiment>)");
  app.add_option("--seed", seed, "overrides data.seed and probe.seed");
  app.add_option("--threads", threads, "worker threads for ensembles and probe batches")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  ExperimentConfig config;
  try {
    config = parse_config(config_path, parse_experiment(experiment));
    if (seed) {
      if (config.data) config.data->seed = *seed;
      if (config.probe) config.probe->seed = *seed;
    }
  } catch (const ConfigError& e) {
    std::cerr << "sbo: config error: " << e.what() << "\n";
    return kConfigError;
  }

  RunOptions options;
  options.threads = threads;
  if (!out_dir.empty()) {
    options.out = out_dir;
  } else if (config.output) {
    options.out = *config.output;
  } else {
    const char* root = std::getenv(kOutputRootEnv);
    options.out = std::filesystem::path(root && *root ? root : "sbo-out") / experiment;
  }

  try {
    return run_experiment(config, options, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "sbo: " << e.what() << "\n";
    return kFailure;
  }
}
