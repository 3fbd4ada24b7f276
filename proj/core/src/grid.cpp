#include "sbo/grid.hpp"

#include <cmath>
#include <string>

#include "sbo/errors.hpp"

namespace sbo {

SpectralGrid::SpectralGrid(double length, std::size_t points) : length_(length), points_(points) {
  if (!(length > 0.0) || !std::isfinite(length))
    throw ParameterError("grid length must be positive and finite, got " + std::to_string(length));
  if (points < 8 || points % 2 != 0)
    throw ParameterError("grid point count must be even and >= 8, got " + std::to_string(points));
}

std::vector<double> SpectralGrid::nodes() const {
  std::vector<double> x(points_);
  for (std::size_t j = 0; j < points_; ++j) x[j] = node(j);
  return x;
}

std::vector<double> SpectralGrid::frequencies() const {
  std::vector<double> xi(points_);
  const double scale = 2.0 * std::numbers::pi / length_;
  const auto half = static_cast<std::ptrdiff_t>(points_ / 2);
  for (std::size_t i = 0; i < points_; ++i)
    xi[i] = scale * static_cast<double>(static_cast<std::ptrdiff_t>(i) - half);
  return xi;
}

std::vector<double> SpectralGrid::wavenumbers() const {
  std::vector<double> xi(points_);
  for (std::size_t k = 0; k < points_; ++k) xi[k] = wavenumber(k);
  return xi;
}

SpectralGrid make_grid(double length, std::int64_t points) {
  if (points < 8 || points % 2 != 0)
    throw ParameterError("grid point count must be even and >= 8, got " + std::to_string(points));
  return SpectralGrid(length, static_cast<std::size_t>(points));
}

}  // namespace sbo
