#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <sbo/bourgain.hpp>
#include <sbo/evolve.hpp>
#include <sbo/grid.hpp>
#include <sbo/imethod.hpp>
#include <sbo/initial_data.hpp>
#include <sbo/multiplier.hpp>

namespace sbo::harness {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Experiment { Simulate, Conserve, ImethodDecay, ScalingCheck, EstimateProbe, ContinuationPlan, GrowthBounds };

Experiment parse_experiment(std::string_view name);
std::string_view to_string(Experiment e);

struct GridBlock {
  double length = 0.0;
  std::int64_t points = 0;
};

/// simulate / conserve
struct RunBlock {
  double duration = 1.0;
  std::size_t stride = 1;
  /// conserve only: track the modified functionals and their derivative terms.
  std::optional<double> cutoff;
  double s = 0.5;
  Blend blend = Blend::SharpMin;
};

struct DecayBlock {
  std::vector<double> ladder{8, 16, 32, 64};
  double delta = 0.1;
  Blend blend = Blend::SharpMin;
  /// Ensemble of seeds data.seed, data.seed + 1, ...
  std::size_t seeds = 1;
};

struct ScalingBlock {
  std::vector<double> lambdas{2, 4};
  double time = 0.25;
};

struct ProbeBlock {
  std::vector<ProbeKind> kinds;
  std::vector<std::size_t> batches{200};
  ProbeSettings settings;
  std::uint64_t seed = 0;
};

struct PlanBlock {
  std::vector<double> horizons{1, 2, 4, 8};
  double s = 0.5;
  double u_norm = 1.0;
  double v_norm = 1.0;
  double u_mass = 1.0;
  PlanConstants constants;
  /// Replace constants.c0 by the ensemble calibration on the grid block.
  bool calibrate_c0 = false;
  double calibration_cutoff = 16.0;
  std::size_t calibration_samples = 50;
};

struct GrowthBlock {
  std::vector<double> s{0.5};
};

struct ExperimentConfig {
  Experiment experiment = Experiment::Simulate;
  std::optional<GridBlock> grid;
  std::optional<DataRecipe> data;
  SystemParams params;
  StepperConfig stepper;
  std::optional<RunBlock> run;
  std::optional<DecayBlock> decay;
  std::optional<ScalingBlock> scaling;
  std::optional<ProbeBlock> probe;
  std::optional<PlanBlock> plan;
  std::optional<GrowthBlock> growth;
  std::optional<std::filesystem::path> output;

  SpectralGrid spectral_grid() const;
};

/// Parses a YAML experiment file. Unknown keys and missing blocks are
/// errors; `experiment` must match the file's own key when both are given.
ExperimentConfig parse_config(const std::filesystem::path& path, std::optional<Experiment> experiment = {});
ExperimentConfig parse_config_text(const std::string& text, std::optional<Experiment> experiment = {});

/// Block completeness and the sign conditions of the global theory.
void validate(const ExperimentConfig& config);

}  // namespace sbo::harness
