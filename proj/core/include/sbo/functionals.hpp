#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "sbo/evolve.hpp"
#include "sbo/field.hpp"
#include "sbo/multiplier.hpp"

namespace sbo {

/// Mass, momentum-type and energy functionals at one instant, either of
/// (u, v) itself or of the smoothed pair (I u, I v).
struct FunctionalSnapshot {
  double t = 0.0;
  double mass = 0.0;
  double ell = 0.0;
  double energy = 0.0;
  bool modified = false;
  std::optional<MultiplierProfile> profile;
  SystemParams params;
};

/// M = ||u||_{L^2}
double mass(const ComplexField& u);

/// L(u, v) = -(alpha / 2 beta) ||v||^2 - Im int u conj(u_x) dx
double ell(const ComplexField& u, const RealField& v, const SystemParams& params);

/// E(u, v) = ||u_x||^2 - (alpha nu / 2 beta) ||D^{1/2} v||^2 + alpha int v |u|^2 dx
///
/// The cubic term is integrated on a twice zero-padded grid, which is exact
/// for band-limited factors.
double energy(const ComplexField& u, const RealField& v, const SystemParams& params);

/// int v |u|^2 dx on the padded grid.
double cubic_integral(const ComplexField& u, const RealField& v);

FunctionalSnapshot snapshot(const ComplexField& u, const RealField& v, const SystemParams& params,
                            double t = 0.0);

/// M(u), L(Iu, Iv), E(Iu, Iv).
FunctionalSnapshot modified_snapshot(const ComplexField& u, const RealField& v, const MultiplierProfile& profile,
                                     const SystemParams& params, double t = 0.0);

/// Left side over bracketed right side of each a-priori inequality, i.e.
/// the smallest constant c for which the inequality holds on this input.
struct AprioriReport {
  // |L| <= c (||v||^2 + M ||u_x||)
  double ell_by_v = 0.0;
  // ||v||^2 <= c (|L| + M ||u_x||)
  double v_by_ell = 0.0;
  // ||u_x||^2 + ||D^{1/2} v||^2 <= c (|E| + |L|^{4/3} + M^4)
  double grad_by_energy = 0.0;
  // |E| <= c (||u_x||^2 + ||D^{1/2} v||^2 + |L|^{4/3} + M^4)
  double energy_by_grad = 0.0;
  // |E| <= c (||u_x||^2 + ||D^{1/2} v||^2 + ||v||^{8/3} + M^4)
  double energy_by_v = 0.0;
  // ||v||^2 <= c (|L| + M |E|^{1/2} + M^3 + 1)
  double v_by_energy = 0.0;
  // ||u||_{H^1}^2 + ||v||_{H^{1/2}}^2 <= c (|E| + |L|^{4/3} + M^4 + 1)
  double h1_by_energy = 0.0;

  static constexpr std::array<std::string_view, 7> names{"ell_by_v", "v_by_ell", "grad_by_energy", "energy_by_grad", "energy_by_v", "v_by_energy", "h1_by_energy"};
  std::array<double, 7> values() const { return {ell_by_v, v_by_ell, grad_by_energy, energy_by_grad, energy_by_v, v_by_energy, h1_by_energy}; }
};

/// Evaluates the inequality chain on (u, v), or on (Iu, Iv) when the
/// snapshot is modified. The snapshot's M, L, E are used as given.
AprioriReport apriori_check(const FunctionalSnapshot& snap, const ComplexField& u, const RealField& v);

/// The four commutator pairings whose sum is d/dt E(Iu, Iv):
///   I1 = alpha nu  <I(|u|^2) - |Iu|^2, D_x (Iv)_x>
///   I2 = alpha beta <(I(|u|^2) - |Iu|^2)_x, |Iu|^2>
///   I3 = -2 alpha^2 Im <Iv Iu, I(vu) - Iv Iu>
///   I4 = -2 alpha  Im <(Iu)_x, (I(vu) - Iv Iu)_x>
/// with <f, g> = int f conj(g). Products are formed alias-free and
/// truncated to the grid.
std::array<double, 4> energy_increment_rhs(const ComplexField& u, const RealField& v,
                                           const MultiplierProfile& profile, const SystemParams& params);

/// d/dt L(Iu, Iv) = -alpha <Iv, (I(|u|^2) - |Iu|^2)_x> + 2 alpha Re <I(vu) - Iv Iu, (Iu)_x>
double ell_increment_rhs(const ComplexField& u, const RealField& v, const MultiplierProfile& profile,
                         const SystemParams& params);

}  // namespace sbo
