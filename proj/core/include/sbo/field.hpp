#pragma once

#include <complex>
#include <concepts>
#include <span>
#include <utility>
#include <vector>

#include "sbo/fft.hpp"
#include "sbo/grid.hpp"

namespace sbo {

/// Physical samples of the complex short wave u on a grid.
class ComplexField {
 public:
  using value_type = cplx;

  explicit ComplexField(SpectralGrid grid);
  ComplexField(SpectralGrid grid, std::vector<cplx> values);

  template <class F>
    requires std::invocable<F, double>
  static ComplexField from_function(const SpectralGrid& grid, F&& f) {
    std::vector<cplx> values(grid.points());
    for (std::size_t j = 0; j < values.size(); ++j) values[j] = cplx(f(grid.node(j)));
    return ComplexField(grid, std::move(values));
  }

  static ComplexField from_spectrum(const SpectralGrid& grid, std::span<const cplx> coeffs);

  const SpectralGrid& grid() const noexcept { return grid_; }
  std::span<const cplx> values() const noexcept { return values_; }
  std::span<cplx> values() noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  cplx operator[](std::size_t j) const noexcept { return values_[j]; }
  cplx& operator[](std::size_t j) noexcept { return values_[j]; }

  Spectrum spectrum() const;

  bool operator==(const ComplexField&) const = default;

 private:
  SpectralGrid grid_;
  std::vector<cplx> values_;
};

/// Physical samples of the real long wave v. Spectral round trips keep the
/// real part, so an odd symbol acting on the Nyquist mode discards it.
class RealField {
 public:
  using value_type = double;

  explicit RealField(SpectralGrid grid);
  RealField(SpectralGrid grid, std::vector<double> values);

  template <class F>
    requires std::invocable<F, double>
  static RealField from_function(const SpectralGrid& grid, F&& f) {
    std::vector<double> values(grid.points());
    for (std::size_t j = 0; j < values.size(); ++j) values[j] = f(grid.node(j));
    return RealField(grid, std::move(values));
  }

  static RealField from_spectrum(const SpectralGrid& grid, std::span<const cplx> coeffs);

  const SpectralGrid& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t j) const noexcept { return values_[j]; }
  double& operator[](std::size_t j) noexcept { return values_[j]; }

  Spectrum spectrum() const;
  ComplexField as_complex() const;

  bool operator==(const RealField&) const = default;

 private:
  SpectralGrid grid_;
  std::vector<double> values_;
};

template <class T>
concept SpectralField = std::same_as<T, ComplexField> || std::same_as<T, RealField>;

/// Spectrum of a field after symmetrizing c_{-k} = conj(c_k); the Nyquist
/// and mean coefficients keep only their real parts.
Spectrum hermitian_symmetrize(std::span<const cplx> coeffs);

}  // namespace sbo
