#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "sbo/field.hpp"

namespace sbo {

/// Multiplies the spectrum of f by symbol(xi) at every grid frequency.
template <SpectralField F, class Symbol>
F apply_symbol(const F& f, Symbol&& symbol) {
  const SpectralGrid& grid = f.grid();
  Spectrum c = f.spectrum();
  for (std::size_t k = 0; k < c.size(); ++k) c[k] *= symbol(grid.wavenumber(k));
  return F::from_spectrum(grid, c);
}

/// Spectral derivative: multiplies by (i xi)^order.
template <SpectralField F>
F derivative(const F& f, int order) {
  if (order < 1) throw std::invalid_argument("derivative order must be >= 1");
  return apply_symbol(f, [order](double xi) { return std::pow(cplx(0.0, xi), order); });
}

/// D_x^{1/2}: multiplies by |xi|^{1/2}; the mean mode maps to zero.
template <SpectralField F>
F half_derivative(const F& f) {
  return apply_symbol(f, [](double xi) { return cplx(std::sqrt(std::abs(xi))); });
}

/// Japanese bracket <xi> = (1 + xi^2)^{1/2}.
inline double bracket(double xi) { return std::sqrt(1.0 + xi * xi); }

/// (sum_k w(xi_k)^{2s} |f^(xi_k)|^2)^{1/2}, scaled so that s = 0 is the L^2
/// norm. Homogeneous weights w = |xi| drop the mean mode.
double sobolev_norm(const SpectralGrid& grid, std::span<const cplx> coeffs, double s,
                    bool homogeneous = false);

template <SpectralField F>
double sobolev_norm(const F& f, double s, bool homogeneous = false) {
  return sobolev_norm(f.grid(), f.spectrum(), s, homogeneous);
}

/// Rectangle-rule L^p norm; p = infinity gives the max modulus.
double lebesgue_norm(const SpectralGrid& grid, std::span<const cplx> values, double p);
double lebesgue_norm(const SpectralGrid& grid, std::span<const double> values, double p);

template <SpectralField F>
double lebesgue_norm(const F& f, double p) {
  return lebesgue_norm(f.grid(), f.values(), p);
}

template <SpectralField F>
double l2_norm(const F& f) {
  return lebesgue_norm(f.grid(), f.values(), 2.0);
}

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// <f, g> = integral of f conj(g), rectangle rule.
cplx inner_product(const ComplexField& f, const ComplexField& g);
double inner_product(const RealField& f, const RealField& g);

}  // namespace sbo
