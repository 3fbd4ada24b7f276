#include "sbo/field.hpp"

#include <stdexcept>

namespace sbo {

ComplexField::ComplexField(SpectralGrid grid) : grid_(grid), values_(grid.points(), cplx(0.0)) {}

ComplexField::ComplexField(SpectralGrid grid, std::vector<cplx> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.points())
    throw std::invalid_argument("ComplexField: value count does not match grid");
}

ComplexField ComplexField::from_spectrum(const SpectralGrid& grid, std::span<const cplx> coeffs) {
  if (coeffs.size() != grid.points())
    throw std::invalid_argument("ComplexField: spectrum size does not match grid");
  return ComplexField(grid, fft::inverse(coeffs));
}

Spectrum ComplexField::spectrum() const { return fft::forward(values_); }

RealField::RealField(SpectralGrid grid) : grid_(grid), values_(grid.points(), 0.0) {}

RealField::RealField(SpectralGrid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.points())
    throw std::invalid_argument("RealField: value count does not match grid");
}

RealField RealField::from_spectrum(const SpectralGrid& grid, std::span<const cplx> coeffs) {
  if (coeffs.size() != grid.points())
    throw std::invalid_argument("RealField: spectrum size does not match grid");
  const auto z = fft::inverse(coeffs);
  std::vector<double> values(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) values[j] = z[j].real();
  return RealField(grid, std::move(values));
}

Spectrum RealField::spectrum() const {
  std::vector<cplx> z(values_.begin(), values_.end());
  return fft::forward(z);
}

ComplexField RealField::as_complex() const {
  return ComplexField(grid_, std::vector<cplx>(values_.begin(), values_.end()));
}

Spectrum hermitian_symmetrize(std::span<const cplx> coeffs) {
  const std::size_t n = coeffs.size();
  Spectrum out(n);
  out[0] = cplx(coeffs[0].real());
  for (std::size_t k = 1; k < n; ++k) out[k] = 0.5 * (coeffs[k] + std::conj(coeffs[n - k]));
  if (n % 2 == 0) out[n / 2] = cplx(coeffs[n / 2].real());
  return out;
}

}  // namespace sbo
