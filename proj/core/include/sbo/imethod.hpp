#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sbo/evolve.hpp"
#include "sbo/field.hpp"
#include "sbo/initial_data.hpp"
#include "sbo/multiplier.hpp"

namespace sbo {

/// u0 -> lambda^{-3/2} u0(x/lambda),  v0 -> lambda^{-2} v0(x/lambda).
///
/// The result lives on a grid of length lambda * L with the same point
/// count, so node j of the new grid is lambda times node j of the old one
/// and the samples are exact. Rejects lambda < 1.
std::pair<ComplexField, RealField> scale_pair(const ComplexField& u0, const RealField& v0, double lambda);

/// ||v0^lambda||_{H^{s-1/2}} lambda^{s+1} / ||v0||_{H^{s-1/2}}
double long_wave_ratio(const RealField& v0, double lambda, double s);

/// lambda = N^{(1-s)/(1+s)} (4 c0)^{1/(1+s)} (1 + ||v0||_{H^{s-1/2}} + ||u0||_{H^s})^{2/(s+1)}
double choose_lambda(double N, double s, double u_norm, double v_norm, double c0);

/// Smallest power-of-two c0 for which every member of a rough-data
/// ensemble satisfies |E(I u0^lambda, I v0^lambda)| <= 1/4 and
/// |L(I u0^lambda, I v0^lambda)| <= 1/4 with lambda = choose_lambda(..., c0).
struct C0Calibration {
  double c0 = 0.0;
  std::size_t samples = 0;
  double worst_energy = 0.0;
  double worst_ell = 0.0;
};

C0Calibration calibrate_c0(const SpectralGrid& grid, double N, double s, const SystemParams& params,
                           std::size_t samples = 50, std::uint64_t seed = 0, double u_norm = 1.0,
                           double v_norm = 1.0);

enum class Resonance { Resonant, Nonresonant };

inline Resonance resonance_of(double nu) { return std::abs(nu) == 1.0 ? Resonance::Resonant : Resonance::Nonresonant; }

/// Local existence time constant * (||Iu0||_{H^1} + ||Iv0||_{H^{1/2}})^{-p-eps}
/// with p = 2/s in the resonant case |nu| = 1 and p = 4 otherwise.
double local_delta(double s, Resonance resonance, double iu_norm, double iv_norm, double constant,
                   double epsilon = 0.01);

struct PlanConstants {
  double c0 = 0.25;
  /// Constant in ||Iu||_{H^1}^2 + ||Iv||_{H^{1/2}}^2 <= cbar^2 (2 + M^4).
  double cbar = 1.0;
  double delta_constant = 1.0;
  double epsilon = 0.01;
  Resonance resonance = Resonance::Resonant;
};

/// Schedule (N, lambda, delta) reaching rescaled horizon T with N^{1-eps}
/// local steps of length delta.
struct ContinuationPlan {
  double s = 0.0;
  double N = 1.0;
  double lambda = 1.0;
  double delta = 0.0;
  std::uint64_t iterations = 0;
  double horizon = 0.0;    ///< requested T
  double reachable = 0.0;  ///< N^{1-eps} delta lambda^{-2}
  double epsilon = 0.01;
};

/// Smallest N (geometric ladder, then bisection) with
/// N^{1-eps} delta lambda(N)^{-2} >= T.
/// Throws InfeasibleRegimeError for s <= 1/3 or when the slack eps leaves no
/// growth in N.
ContinuationPlan continuation_plan(double T, double s, double u_norm, double v_norm, double u_mass,
                                   const PlanConstants& constants = {});

/// (e_u, e_v): polynomial growth exponents of ||u(t)||_{H^s} and
/// ||v(t)||_{H^{s-1/2}}. Defined for 1/3 < s < 1.
std::pair<double, double> growth_exponents(double s);

struct DecaySample {
  double N = 0.0;
  double increment = 0.0;  ///< |Delta E(Iu, Iv)| + |Delta L(Iu, Iv)|
  double delta_energy = 0.0;
  double delta_ell = 0.0;
};

struct DecayResult {
  std::vector<DecaySample> samples;
  double slope = 0.0;
  bool degenerate = false;
};

/// Least-squares slope of log y against log x.
double loglog_slope(std::span<const double> x, std::span<const double> y);

/// Evolves the pair over one shared interval [0, delta] and records the
/// modified-functional increment for every N of the ladder.
DecayResult run_almost_conservation(const SBOState& initial, const SystemParams& params,
                                    const StepperConfig& config, std::span<const double> ladder, double s,
                                    double delta, Blend blend = Blend::SharpMin);

DecayResult run_almost_conservation(const DataRecipe& recipe, const SpectralGrid& grid,
                                    const SystemParams& params, const StepperConfig& config,
                                    std::span<const double> ladder, double delta, Blend blend = Blend::SharpMin);

}  // namespace sbo
