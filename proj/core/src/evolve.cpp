#include "sbo/evolve.hpp"

#include <cmath>
#include <string>

#include "sbo/errors.hpp"
#include "sbo/operators.hpp"

namespace sbo {

void SystemParams::validate() const {
  if (beta == 0.0) throw ParameterError("beta must be nonzero");
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(nu))
    throw ParameterError("system parameters must be finite");
}

Scheme parse_scheme(std::string_view name) {
  if (name == "if-rk4") return Scheme::IfRk4;
  if (name == "strang") return Scheme::Strang;
  throw ParameterError("unknown scheme '" + std::string(name) + "'");
}

std::string_view to_string(Scheme scheme) { return scheme == Scheme::IfRk4 ? "if-rk4" : "strang"; }

BlowUpError::BlowUpError(double time, SBOState last_finite)
    : std::runtime_error("non-finite values at t = " + std::to_string(time)),
      time_(time),
      last_(std::move(last_finite)) {}

ComplexField linear_flow_schrodinger(const ComplexField& u, double t) {
  return apply_symbol(u, [t](double xi) { return std::polar(1.0, -xi * xi * t); });
}

RealField linear_flow_bo(const RealField& v, double t, double nu) {
  return apply_symbol(v, [t, nu](double xi) { return std::polar(1.0, -nu * xi * std::abs(xi) * t); });
}

void dealias_in_place(const SpectralGrid& grid, Spectrum& coeffs) {
  const auto n = static_cast<std::ptrdiff_t>(grid.points());
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (3 * std::abs(grid.mode(k)) > n) coeffs[k] = 0.0;
}

namespace {

struct Products {
  Spectrum uv;   // spectrum of u v
  Spectrum uu;   // spectrum of |u|^2
};

Products form_products(const SpectralGrid& grid, const Spectrum& u_hat, const Spectrum& v_hat, bool dealias) {
  const auto u = fft::inverse(u_hat);
  const auto v = fft::inverse(v_hat);
  std::vector<cplx> uv(u.size()), uu(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    uv[j] = u[j] * v[j].real();
    uu[j] = std::norm(u[j]);
  }
  Products p{fft::forward(uv), fft::forward(uu)};
  if (dealias) {
    dealias_in_place(grid, p.uv);
    dealias_in_place(grid, p.uu);
  }
  return p;
}

}  // namespace

std::pair<ComplexField, RealField> nonlinearity(const SBOState& state, const SystemParams& params, bool dealias) {
  const SpectralGrid& grid = state.u.grid();
  auto p = form_products(grid, state.u.spectrum(), state.v.spectrum(), dealias);
  const cplx minus_i_alpha(0.0, -params.alpha);
  for (std::size_t k = 0; k < p.uv.size(); ++k) {
    p.uv[k] *= minus_i_alpha;
    p.uu[k] *= cplx(0.0, params.beta * grid.wavenumber(k));
  }
  p.uu[grid.nyquist_index()] = 0.0;
  return {ComplexField::from_spectrum(grid, p.uv), RealField::from_spectrum(grid, p.uu)};
}

Stepper::Stepper(const SBOState& initial, SystemParams params, StepperConfig config)
    : grid_(initial.u.grid()),
      params_(params),
      config_(config),
      u_hat_(initial.u.spectrum()),
      v_hat_(initial.v.spectrum()),
      t_(initial.t) {
  if (!(initial.v.grid() == grid_)) throw ParameterError("u and v must share one grid");
  if (!(config_.dt > 0.0) || !std::isfinite(config_.dt)) throw ParameterError("dt must be positive");
  if (config_.dealias) {
    dealias_in_place(grid_, u_hat_);
    dealias_in_place(grid_, v_hat_);
  }
  compute_factors(nominal_, config_.dt);
}

void Stepper::compute_factors(Factors& f, double dt) const {
  const std::size_t n = grid_.points();
  f.dt = dt;
  f.full_u.resize(n);
  f.half_u.resize(n);
  f.full_v.resize(n);
  f.half_v.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double xi = grid_.wavenumber(k);
    const double wu = -xi * xi;
    const double wv = -params_.nu * xi * std::abs(xi);
    f.full_u[k] = std::polar(1.0, wu * dt);
    f.half_u[k] = std::polar(1.0, wu * 0.5 * dt);
    f.full_v[k] = std::polar(1.0, wv * dt);
    f.half_v[k] = std::polar(1.0, wv * 0.5 * dt);
  }
}

void Stepper::rhs(const Spectrum& u, const Spectrum& v, Spectrum& du, Spectrum& dv) const {
  auto p = form_products(grid_, u, v, config_.dealias);
  const cplx minus_i_alpha(0.0, -params_.alpha);
  for (std::size_t k = 0; k < u.size(); ++k) {
    du[k] = minus_i_alpha * p.uv[k];
    dv[k] = cplx(0.0, params_.beta * grid_.wavenumber(k)) * p.uu[k];
  }
  dv[grid_.nyquist_index()] = 0.0;
}

void Stepper::step_if_rk4(const Factors& f) {
  const std::size_t n = u_hat_.size();
  const double h = f.dt;
  Spectrum au(n), av(n), bu(n), bv(n), cu(n), cv(n), du(n), dv(n), su(n), sv(n);

  rhs(u_hat_, v_hat_, au, av);
  for (std::size_t k = 0; k < n; ++k) {
    su[k] = f.half_u[k] * (u_hat_[k] + 0.5 * h * au[k]);
    sv[k] = f.half_v[k] * (v_hat_[k] + 0.5 * h * av[k]);
  }
  rhs(su, sv, bu, bv);
  for (std::size_t k = 0; k < n; ++k) {
    su[k] = f.half_u[k] * u_hat_[k] + 0.5 * h * bu[k];
    sv[k] = f.half_v[k] * v_hat_[k] + 0.5 * h * bv[k];
  }
  rhs(su, sv, cu, cv);
  for (std::size_t k = 0; k < n; ++k) {
    su[k] = f.full_u[k] * u_hat_[k] + h * f.half_u[k] * cu[k];
    sv[k] = f.full_v[k] * v_hat_[k] + h * f.half_v[k] * cv[k];
  }
  rhs(su, sv, du, dv);
  for (std::size_t k = 0; k < n; ++k) {
    u_hat_[k] = f.full_u[k] * u_hat_[k] +
                h / 6.0 * (f.full_u[k] * au[k] + 2.0 * f.half_u[k] * (bu[k] + cu[k]) + du[k]);
    v_hat_[k] = f.full_v[k] * v_hat_[k] +
                h / 6.0 * (f.full_v[k] * av[k] + 2.0 * f.half_v[k] * (bv[k] + cv[k]) + dv[k]);
  }
}

void Stepper::step_strang(const Factors& f) {
  const std::size_t n = u_hat_.size();
  const double h = f.dt;
  for (std::size_t k = 0; k < n; ++k) {
    u_hat_[k] *= f.half_u[k];
    v_hat_[k] *= f.half_v[k];
  }
  // Classical RK4 on the nonlinear subflow.
  Spectrum k1u(n), k1v(n), k2u(n), k2v(n), k3u(n), k3v(n), k4u(n), k4v(n), su(n), sv(n);
  rhs(u_hat_, v_hat_, k1u, k1v);
  for (std::size_t k = 0; k < n; ++k) {
    su[k] = u_hat_[k] + 0.5 * h * k1u[k];
    sv[k] = v_hat_[k] + 0.5 * h * k1v[k];
  }
  rhs(su, sv, k2u, k2v);
  for (std::size_t k = 0; k < n; ++k) {
    su[k] = u_hat_[k] + 0.5 * h * k2u[k];
    sv[k] = v_hat_[k] + 0.5 * h * k2v[k];
  }
  rhs(su, sv, k3u, k3v);
  for (std::size_t k = 0; k < n; ++k) {
    su[k] = u_hat_[k] + h * k3u[k];
    sv[k] = v_hat_[k] + h * k3v[k];
  }
  rhs(su, sv, k4u, k4v);
  for (std::size_t k = 0; k < n; ++k) {
    u_hat_[k] += h / 6.0 * (k1u[k] + 2.0 * (k2u[k] + k3u[k]) + k4u[k]);
    v_hat_[k] += h / 6.0 * (k1v[k] + 2.0 * (k2v[k] + k3v[k]) + k4v[k]);
    u_hat_[k] *= f.half_u[k];
    v_hat_[k] *= f.half_v[k];
  }
}

void Stepper::advance() { advance(config_.dt); }

void Stepper::advance(double dt) {
  const Factors* f = &nominal_;
  if (dt != nominal_.dt) {
    if (!(dt > 0.0)) throw ParameterError("step size must be positive");
    if (partial_.dt != dt) compute_factors(partial_, dt);
    f = &partial_;
  }
  if (config_.scheme == Scheme::IfRk4)
    step_if_rk4(*f);
  else
    step_strang(*f);
  t_ += dt;
}

bool Stepper::finite() const noexcept {
  double sum = 0.0;
  for (const auto& z : u_hat_) sum += std::norm(z);
  for (const auto& z : v_hat_) sum += std::norm(z);
  return std::isfinite(sum);
}

SBOState Stepper::state() const {
  return {ComplexField::from_spectrum(grid_, u_hat_), RealField::from_spectrum(grid_, v_hat_), t_};
}

double Stepper::imag_residue() const {
  double m = 0.0;
  for (const auto& z : fft::inverse(v_hat_)) m = std::max(m, std::abs(z.imag()));
  return m;
}

SBOState step(const SBOState& state, const SystemParams& params, const StepperConfig& config) {
  Stepper stepper(state, params, config);
  stepper.advance();
  if (!stepper.finite()) throw BlowUpError(stepper.time(), state);
  return stepper.state();
}

SBOState evolve(const SBOState& state, const SystemParams& params, const StepperConfig& config,
                double duration, const Observer& observer, std::size_t stride) {
  if (!(duration >= 0.0)) throw ParameterError("evolution duration must be >= 0");
  if (stride == 0) stride = 1;
  Stepper stepper(state, params, config);
  if (observer) observer(stepper.state());
  if (duration == 0.0) return stepper.state();

  const double dt = config.dt;
  auto full = static_cast<std::size_t>(std::floor(duration / dt));
  double rest = duration - static_cast<double>(full) * dt;
  // Absorb a remainder that is only rounding noise.
  if (rest <= 1e-9 * dt) rest = 0.0;
  if (full > 0 && dt - rest <= 1e-9 * dt) {
    rest = 0.0;
    ++full;
  }
  const std::size_t steps = full + (rest > 0.0 ? 1 : 0);

  SBOState last = state;
  for (std::size_t i = 1; i <= steps; ++i) {
    if (i <= full)
      stepper.advance(dt);
    else
      stepper.advance(rest);
    if (!stepper.finite()) throw BlowUpError(stepper.time(), last);
    const bool at_stride = i % stride == 0;
    const bool at_end = i == steps;
    if (at_end || (observer && at_stride)) {
      last = stepper.state();
      if (at_end) last.t = state.t + duration;
      if (observer) observer(last);
    }
  }
  return last;
}

SBOState time_reversed(const SBOState& state) {
  const std::size_t n = state.u.size();
  ComplexField u(state.u.grid());
  RealField v(state.v.grid());
  // Node j sits at -L/2 + j h; its mirror image is node (n - j) mod n.
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t m = (n - j) % n;
    u[m] = std::conj(state.u[j]);
    v[m] = state.v[j];
  }
  return {std::move(u), std::move(v), state.t};
}

}  // namespace sbo
