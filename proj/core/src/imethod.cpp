#include "sbo/imethod.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sbo/errors.hpp"
#include "sbo/functionals.hpp"
#include "sbo/operators.hpp"

namespace sbo {

std::pair<ComplexField, RealField> scale_pair(const ComplexField& u0, const RealField& v0, double lambda) {
  if (!(lambda >= 1.0)) throw ParameterError("scaling parameter lambda must be >= 1");
  const SpectralGrid grid(lambda * u0.grid().length(), u0.grid().points());
  const double cu = std::pow(lambda, -1.5);
  const double cv = std::pow(lambda, -2.0);
  std::vector<cplx> u(u0.values().begin(), u0.values().end());
  std::vector<double> v(v0.values().begin(), v0.values().end());
  for (auto& z : u) z *= cu;
  for (auto& x : v) x *= cv;
  return {ComplexField(grid, std::move(u)), RealField(grid, std::move(v))};
}

double long_wave_ratio(const RealField& v0, double lambda, double s) {
  const auto [_, v] = scale_pair(ComplexField(v0.grid()), v0, lambda);
  const double base = sobolev_norm(v0, s - 0.5);
  if (base == 0.0) return 0.0;
  return sobolev_norm(v, s - 0.5) * std::pow(lambda, s + 1.0) / base;
}

double choose_lambda(double N, double s, double u_norm, double v_norm, double c0) {
  if (!(N >= 1.0)) throw ParameterError("choose_lambda: N must be >= 1");
  if (!(s > 0.0 && s < 1.0)) throw ParameterError("choose_lambda: s must lie in (0, 1)");
  if (!(c0 > 0.0)) throw ParameterError("choose_lambda: c0 must be positive");
  return std::pow(N, (1.0 - s) / (1.0 + s)) * std::pow(4.0 * c0, 1.0 / (1.0 + s)) *
         std::pow(1.0 + v_norm + u_norm, 2.0 / (s + 1.0));
}

C0Calibration calibrate_c0(const SpectralGrid& grid, double N, double s, const SystemParams& params,
                           std::size_t samples, std::uint64_t seed, double u_norm, double v_norm) {
  if (samples == 0) throw ParameterError("calibrate_c0: empty ensemble");
  std::vector<std::pair<ComplexField, RealField>> ensemble;
  ensemble.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i)
    ensemble.emplace_back(rough_random(s, seed + i, grid, u_norm), rough_random_real(s, seed + i, grid, v_norm));
  const MultiplierProfile profile(N, s);

  for (int k = -8; k <= 60; ++k) {
    const double c0 = std::ldexp(1.0, k);
    C0Calibration out{c0, samples, 0.0, 0.0};
    bool ok = true;
    for (const auto& [u0, v0] : ensemble) {
      const double lam = std::max(1.0, choose_lambda(N, s, sobolev_norm(u0, s), sobolev_norm(v0, s - 0.5), c0));
      const auto [u, v] = scale_pair(u0, v0, lam);
      const auto snap = modified_snapshot(u, v, profile, params);
      out.worst_energy = std::max(out.worst_energy, std::abs(snap.energy));
      out.worst_ell = std::max(out.worst_ell, std::abs(snap.ell));
      if (out.worst_energy > 0.25 || out.worst_ell > 0.25) {
        ok = false;
        break;
      }
    }
    if (ok) return out;
  }
  throw ParameterError("calibrate_c0: no power-of-two constant up to 2^60 satisfies the bound");
}

double local_delta(double s, Resonance resonance, double iu_norm, double iv_norm, double constant,
                   double epsilon) {
  if (!(s > 0.0)) throw ParameterError("local_delta: s must be positive");
  const double sum = iu_norm + iv_norm;
  const double p = resonance == Resonance::Resonant ? 2.0 / s : 4.0;
  return constant * std::pow(sum, -(p + epsilon));
}

ContinuationPlan continuation_plan(double T, double s, double u_norm, double v_norm, double u_mass,
                                   const PlanConstants& k) {
  if (!(s > 1.0 / 3.0)) throw InfeasibleRegimeError("continuation needs s > 1/3, got s = " + std::to_string(s));
  if (!(s < 1.0)) throw ParameterError("continuation plan needs s < 1");
  if (!(T >= 0.0)) throw ParameterError("continuation horizon must be >= 0");
  const double growth = 1.0 - k.epsilon - 2.0 * (1.0 - s) / (1.0 + s);
  if (!(growth > 0.0))
    throw InfeasibleRegimeError("slack eps = " + std::to_string(k.epsilon) + " leaves no room at s = " +
                                std::to_string(s));

  // ||Iu||_{H^1} + ||Iv||_{H^{1/2}} <= sqrt(2) cbar (2 + M^4)^{1/2} holds uniformly
  // along the iteration, so every local interval has the same length.
  const double sum_bound = std::sqrt(2.0) * k.cbar * std::sqrt(2.0 + std::pow(u_mass, 4));
  const double delta = local_delta(s, k.resonance, sum_bound, 0.0, k.delta_constant, k.epsilon);

  ContinuationPlan plan;
  plan.s = s;
  plan.delta = delta;
  plan.horizon = T;
  plan.epsilon = k.epsilon;
  auto lambda_of = [&](double N) { return std::max(1.0, choose_lambda(N, s, u_norm, v_norm, k.c0)); };
  auto reach = [&](double N) {
    const double lam = lambda_of(N);
    return std::pow(N, 1.0 - k.epsilon) * delta / (lam * lam);
  };

  double N = 1.0;
  if (T > 0.0 && reach(N) < T) {
    double lo = 1.0;
    double hi = 2.0;
    while (reach(hi) < T) {
      lo = hi;
      hi *= 2.0;
      if (!std::isfinite(hi) || hi > 1e300)
        throw InfeasibleRegimeError("continuation plan: required N exceeds double range");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
      const double mid = std::sqrt(lo * hi);
      (reach(mid) >= T ? hi : lo) = mid;
    }
    N = hi;
  }
  plan.N = N;
  plan.lambda = lambda_of(N);
  plan.reachable = reach(N);
  plan.iterations = T == 0.0 ? 0 : static_cast<std::uint64_t>(std::ceil(T * plan.lambda * plan.lambda / delta));
  return plan;
}

std::pair<double, double> growth_exponents(double s) {
  if (!(s > 1.0 / 3.0 && s < 1.0)) throw InfeasibleRegimeError("growth exponents need 1/3 < s < 1");
  const double eu = (s + 1.0) * (1.0 - s) / (3.0 * s - 1.0);
  const double ev = s >= 0.5 ? eu : 1.5 * (1.0 - s) / (3.0 * s - 1.0);
  return {eu, ev};
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) return std::numeric_limits<double>::quiet_NaN();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

DecayResult run_almost_conservation(const SBOState& initial, const SystemParams& params,
                                    const StepperConfig& config, std::span<const double> ladder, double s,
                                    double delta, Blend blend) {
  params.validate();
  SBOState start = initial;
  if (config.dealias) start = SBOState{dealias(initial.u), dealias(initial.v), initial.t};
  const SBOState final_state = evolve(start, params, config, delta);

  DecayResult result;
  std::vector<double> xs, ys;
  for (const double N : ladder) {
    const MultiplierProfile profile(N, s, blend);
    const auto a = modified_snapshot(start.u, start.v, profile, params, start.t);
    const auto b = modified_snapshot(final_state.u, final_state.v, profile, params, final_state.t);
    DecaySample sample;
    sample.N = N;
    sample.delta_energy = b.energy - a.energy;
    sample.delta_ell = b.ell - a.ell;
    sample.increment = std::abs(sample.delta_energy) + std::abs(sample.delta_ell);
    const double floor = 1e-12 * (1.0 + std::abs(a.energy) + std::abs(a.ell));
    if (!(sample.increment > floor) || !std::isfinite(sample.increment)) result.degenerate = true;
    result.samples.push_back(sample);
    xs.push_back(N);
    ys.push_back(sample.increment);
  }
  if (!result.degenerate) result.slope = loglog_slope(xs, ys);
  if (result.samples.size() < 2 || !std::isfinite(result.slope)) result.degenerate = true;
  return result;
}

DecayResult run_almost_conservation(const DataRecipe& recipe, const SpectralGrid& grid,
                                    const SystemParams& params, const StepperConfig& config,
                                    std::span<const double> ladder, double delta, Blend blend) {
  auto [u, v] = make_initial_pair(recipe, grid);
  const double s = recipe.kind == DataKind::RoughRandom ? recipe.target_s : 0.5;
  return run_almost_conservation(SBOState{std::move(u), std::move(v), 0.0}, params, config, ladder, s, delta,
                                 blend);
}

}  // namespace sbo
