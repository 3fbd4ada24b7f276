#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <vector>

namespace sbo {

/// Uniform periodic grid on [-length/2, length/2) with its frequency lattice.
///
/// Spectral arrays are stored in FFT order: index k holds the integer mode
/// k for k < points/2 and k - points otherwise. The angular frequency of
/// mode k is 2*pi*k/length.
class SpectralGrid {
 public:
  SpectralGrid(double length, std::size_t points);

  double length() const noexcept { return length_; }
  std::size_t points() const noexcept { return points_; }
  double spacing() const noexcept { return length_ / static_cast<double>(points_); }

  double node(std::size_t j) const noexcept {
    return -0.5 * length_ + static_cast<double>(j) * spacing();
  }

  std::ptrdiff_t mode(std::size_t k) const noexcept {
    const auto n = static_cast<std::ptrdiff_t>(points_);
    const auto kk = static_cast<std::ptrdiff_t>(k);
    return kk < n / 2 ? kk : kk - n;
  }

  double wavenumber(std::size_t k) const noexcept {
    return 2.0 * std::numbers::pi / length_ * static_cast<double>(mode(k));
  }

  double max_frequency() const noexcept {
    return std::numbers::pi * static_cast<double>(points_) / length_;
  }

  std::size_t nyquist_index() const noexcept { return points_ / 2; }

  std::vector<double> nodes() const;
  /// Frequencies in ascending order, -points/2 ... points/2 - 1.
  std::vector<double> frequencies() const;
  /// Frequencies in storage (FFT) order.
  std::vector<double> wavenumbers() const;

  bool operator==(const SpectralGrid&) const = default;

 private:
  double length_;
  std::size_t points_;
};

/// Validating factory: rejects non-positive length and odd or tiny point counts.
SpectralGrid make_grid(double length, std::int64_t points);

}  // namespace sbo
