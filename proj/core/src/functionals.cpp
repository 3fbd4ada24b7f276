#include "sbo/functionals.hpp"

#include <cmath>

#include "sbo/errors.hpp"
#include "sbo/operators.hpp"

namespace sbo {
namespace {

void require_beta(const SystemParams& params) {
  if (params.beta == 0.0) throw ParameterError("functionals need beta != 0");
}

// L sum_k w(xi_k) |c_k|^2
template <class Weight>
double weighted_energy(const SpectralGrid& grid, const Spectrum& c, Weight&& w) {
  double sum = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) sum += w(grid.wavenumber(k)) * std::norm(c[k]);
  return grid.length() * sum;
}

// <f, g> = L sum_k f_k conj(g_k)
cplx spectral_inner(const SpectralGrid& grid, const Spectrum& f, const Spectrum& g) {
  cplx sum(0.0);
  for (std::size_t k = 0; k < f.size(); ++k) sum += f[k] * std::conj(g[k]);
  return grid.length() * sum;
}

// Spectrum of a(x) * b(x) (or a * conj(b)), computed on the doubled grid and
// truncated back, so no aliasing enters the retained modes.
Spectrum exact_product(const Spectrum& a, const Spectrum& b, bool conjugate_b) {
  const std::size_t n = a.size();
  const auto fa = fft::inverse(fft::resize(a, 2 * n));
  const auto fb = fft::inverse(fft::resize(b, 2 * n));
  std::vector<cplx> prod(2 * n);
  for (std::size_t j = 0; j < prod.size(); ++j) prod[j] = fa[j] * (conjugate_b ? std::conj(fb[j]) : fb[j]);
  return fft::resize(fft::forward(prod), n);
}

template <class Symbol>
Spectrum times(const SpectralGrid& grid, Spectrum c, Symbol&& symbol) {
  for (std::size_t k = 0; k < c.size(); ++k) c[k] *= symbol(grid.wavenumber(k));
  return c;
}

Spectrum minus(Spectrum a, const Spectrum& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

const auto ddx = [](double xi) { return cplx(0.0, xi); };

// Shared spectral pieces of the two increment identities.
struct Commutators {
  SpectralGrid grid;
  Spectrum U, V;         // Iu, Iv
  Spectrum density_gap;  // I(|u|^2) - |Iu|^2
  Spectrum UU;           // |Iu|^2
  Spectrum coupling_gap; // I(vu) - Iv Iu
  Spectrum VU;           // Iv Iu
};

Commutators commutators(const ComplexField& u, const RealField& v, const MultiplierProfile& profile) {
  const SpectralGrid& grid = u.grid();
  const auto m = [&profile](double xi) { return cplx(profile(xi)); };
  const Spectrum uh = u.spectrum();
  const Spectrum vh = v.spectrum();
  Commutators c{grid, times(grid, uh, m), times(grid, vh, m), {}, {}, {}, {}};
  c.UU = exact_product(c.U, c.U, true);
  c.density_gap = minus(times(grid, exact_product(uh, uh, true), m), c.UU);
  c.VU = exact_product(c.V, c.U, false);
  c.coupling_gap = minus(times(grid, exact_product(vh, uh, false), m), c.VU);
  return c;
}

}  // namespace

double mass(const ComplexField& u) { return l2_norm(u); }

double ell(const ComplexField& u, const RealField& v, const SystemParams& params) {
  require_beta(params);
  const double v2 = std::pow(l2_norm(v), 2);
  // -Im int u conj(u_x) = L sum xi |c_k|^2
  const double momentum = weighted_energy(u.grid(), u.spectrum(), [](double xi) { return xi; });
  return -params.alpha / (2.0 * params.beta) * v2 + momentum;
}

double cubic_integral(const ComplexField& u, const RealField& v) {
  const std::size_t n = u.size();
  const auto up = fft::inverse(fft::resize(u.spectrum(), 2 * n));
  const auto vp = fft::inverse(fft::resize(v.spectrum(), 2 * n));
  double sum = 0.0;
  for (std::size_t j = 0; j < 2 * n; ++j) sum += vp[j].real() * std::norm(up[j]);
  return 0.5 * u.grid().spacing() * sum;
}

double energy(const ComplexField& u, const RealField& v, const SystemParams& params) {
  require_beta(params);
  const double ux2 = weighted_energy(u.grid(), u.spectrum(), [](double xi) { return xi * xi; });
  const double dv2 = weighted_energy(v.grid(), v.spectrum(), [](double xi) { return std::abs(xi); });
  return ux2 - params.alpha * params.nu / (2.0 * params.beta) * dv2 + params.alpha * cubic_integral(u, v);
}

FunctionalSnapshot snapshot(const ComplexField& u, const RealField& v, const SystemParams& params, double t) {
  return {t, mass(u), ell(u, v, params), energy(u, v, params), false, std::nullopt, params};
}

FunctionalSnapshot modified_snapshot(const ComplexField& u, const RealField& v, const MultiplierProfile& profile,
                                     const SystemParams& params, double t) {
  const auto Iu = apply_I(profile, u);
  const auto Iv = apply_I(profile, v);
  return {t, mass(u), ell(Iu, Iv, params), energy(Iu, Iv, params), true, profile, params};
}

AprioriReport apriori_check(const FunctionalSnapshot& snap, const ComplexField& u_in, const RealField& v_in) {
  const ComplexField u = snap.modified && snap.profile ? apply_I(*snap.profile, u_in) : u_in;
  const RealField v = snap.modified && snap.profile ? apply_I(*snap.profile, v_in) : v_in;

  const double M = snap.mass;
  const double L = std::abs(snap.ell);
  const double E = std::abs(snap.energy);
  const double ux = sobolev_norm(u, 1.0, true);
  const double dv = sobolev_norm(v, 0.5, true);
  const double v0 = l2_norm(v);
  const double h1u = sobolev_norm(u, 1.0);
  const double hhv = sobolev_norm(v, 0.5);

  auto ratio = [](double lhs, double rhs) { return lhs == 0.0 ? 0.0 : lhs / rhs; };
  const double M4 = std::pow(M, 4);
  const double L43 = std::pow(L, 4.0 / 3.0);

  AprioriReport r;
  r.ell_by_v = ratio(L, v0 * v0 + M * ux);
  r.v_by_ell = ratio(v0 * v0, L + M * ux);
  r.grad_by_energy = ratio(ux * ux + dv * dv, E + L43 + M4);
  r.energy_by_grad = ratio(E, ux * ux + dv * dv + L43 + M4);
  r.energy_by_v = ratio(E, ux * ux + dv * dv + std::pow(v0, 8.0 / 3.0) + M4);
  r.v_by_energy = ratio(v0 * v0, L + M * std::sqrt(E) + M * M * M + 1.0);
  r.h1_by_energy = ratio(h1u * h1u + hhv * hhv, E + L43 + M4 + 1.0);
  return r;
}

std::array<double, 4> energy_increment_rhs(const ComplexField& u, const RealField& v,
                                           const MultiplierProfile& profile, const SystemParams& params) {
  const auto c = commutators(u, v, profile);
  const auto& g = c.grid;
  const double a = params.alpha;

  const Spectrum dxV = times(g, c.V, [](double xi) { return cplx(0.0, xi * std::abs(xi)); });
  const double i1 = a * params.nu * spectral_inner(g, c.density_gap, dxV).real();
  const double i2 = a * params.beta * spectral_inner(g, times(g, c.density_gap, ddx), c.UU).real();
  const double i3 = -2.0 * a * a * spectral_inner(g, c.VU, c.coupling_gap).imag();
  const double i4 = -2.0 * a * spectral_inner(g, times(g, c.U, ddx), times(g, c.coupling_gap, ddx)).imag();
  return {i1, i2, i3, i4};
}

double ell_increment_rhs(const ComplexField& u, const RealField& v, const MultiplierProfile& profile,
                         const SystemParams& params) {
  const auto c = commutators(u, v, profile);
  const auto& g = c.grid;
  const double a = params.alpha;
  const double first = spectral_inner(g, c.V, times(g, c.density_gap, ddx)).real();
  const double second = spectral_inner(g, c.coupling_gap, times(g, c.U, ddx)).real();
  return -a * first + 2.0 * a * second;
}

}  // namespace sbo
