#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "sbo/field.hpp"

namespace sbo {

/// Coefficients of  i u_t + u_xx = alpha u v,  v_t + nu (|D| v)_x = beta (|u|^2)_x.
struct SystemParams {
  double alpha = 1.0;
  double beta = -1.0;
  double nu = 1.0;

  /// beta != 0 (the functionals divide by it).
  void validate() const;
  /// nu > 0 and alpha/beta < 0, the regime where L and E control H^1 x H^{1/2}.
  bool in_global_regime() const noexcept { return nu > 0.0 && beta != 0.0 && alpha / beta < 0.0; }
};

struct SBOState {
  ComplexField u;
  RealField v;
  double t = 0.0;
};

enum class Scheme { IfRk4, Strang };

Scheme parse_scheme(std::string_view name);
std::string_view to_string(Scheme scheme);

struct StepperConfig {
  double dt = 1e-3;
  Scheme scheme = Scheme::IfRk4;
  bool dealias = true;
};

/// Non-finite values appeared; carries the time and the last finite state.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(double time, SBOState last_finite);
  double time() const noexcept { return time_; }
  const SBOState& last_finite() const noexcept { return last_; }

 private:
  double time_;
  SBOState last_;
};

/// e^{it d_x^2} u: multiplies by e^{-i xi^2 t}.
ComplexField linear_flow_schrodinger(const ComplexField& u, double t);
/// e^{-nu t d_x |d_x|} v: multiplies by e^{-i nu xi |xi| t}.
RealField linear_flow_bo(const RealField& v, double t, double nu);

/// 2/3 rule: zeroes every mode with |k| > points/3.
template <SpectralField F>
F dealias(const F& f);

void dealias_in_place(const SpectralGrid& grid, Spectrum& coeffs);

/// Right-hand side with the linear part removed:
/// du = -i alpha u v,  dv = beta (|u|^2)_x, products formed in physical space.
std::pair<ComplexField, RealField> nonlinearity(const SBOState& state, const SystemParams& params,
                                                bool dealias = true);

/// Integrating-factor stepper holding the state in spectral form.
///
/// Both linear flows are applied exactly between Runge-Kutta stages, so the
/// step size is limited only by the nonlinear terms. With dealiasing on, the
/// initial state is projected onto the retained modes |k| <= points/3 first;
/// the scheme is then the Galerkin truncation, which conserves M, L and E.
class Stepper {
 public:
  Stepper(const SBOState& initial, SystemParams params, StepperConfig config);

  /// Advances by dt (or by a shorter final step when given).
  void advance();
  void advance(double dt);

  double time() const noexcept { return t_; }
  SBOState state() const;
  /// Max |Im v| of the physical long wave before projection onto real values.
  double imag_residue() const;
  bool finite() const noexcept;

 private:
  struct Factors {
    double dt = 0.0;
    std::vector<cplx> full_u, half_u, full_v, half_v;
  };
  void compute_factors(Factors& f, double dt) const;
  void rhs(const Spectrum& u, const Spectrum& v, Spectrum& du, Spectrum& dv) const;
  void step_if_rk4(const Factors& f);
  void step_strang(const Factors& f);

  SpectralGrid grid_;
  SystemParams params_;
  StepperConfig config_;
  Spectrum u_hat_, v_hat_;
  double t_;
  Factors nominal_, partial_;
};

/// One step of the configured scheme.
SBOState step(const SBOState& state, const SystemParams& params, const StepperConfig& config);

using Observer = std::function<void(const SBOState&)>;

/// Steps to time state.t + duration (after the projection described at
/// Stepper when dealiasing is on); the final step is shortened to land
/// exactly. The observer sees the initial state, every stride-th step and
/// the final state, i.e. ceil(steps/stride) + 1 calls.
SBOState evolve(const SBOState& state, const SystemParams& params, const StepperConfig& config,
                double duration, const Observer& observer = {}, std::size_t stride = 1);

/// (u, v)(x) -> (conj u, v)(-x). Evolving the image forward by T undoes a
/// forward evolution by T.
SBOState time_reversed(const SBOState& state);

template <SpectralField F>
F dealias(const F& f) {
  Spectrum c = f.spectrum();
  dealias_in_place(f.grid(), c);
  return F::from_spectrum(f.grid(), c);
}

}  // namespace sbo
