#pragma once

#include <cstdint>
#include <string_view>
#include <utility>

#include "sbo/field.hpp"

namespace sbo {

enum class DataKind { Gaussian, ModulatedGaussian, RoughRandom };

DataKind parse_data_kind(std::string_view name);
std::string_view to_string(DataKind kind);

/// Recipe for an initial pair (u0, v0).
///
/// Gaussian kinds use amplitude/width/modulation for u0 and
/// v_amplitude/v_width for v0. The rough kind draws u0 in H^s and v0 in
/// H^{s-1/2} with prescribed norms (u_norm, v_norm).
struct DataRecipe {
  DataKind kind = DataKind::Gaussian;
  double amplitude = 1.0;
  double width = 1.0;
  double modulation = 0.0;
  double v_amplitude = 0.0;
  double v_width = 1.0;
  double target_s = 0.5;
  std::uint64_t seed = 0;
  double u_norm = 1.0;
  double v_norm = 1.0;
  /// Added to the rough spectral decay exponent; > 0 gives strict H^s membership.
  double extra_decay = 0.0;

  void validate() const;
};

/// u0 = A e^{i xi0 x} e^{-(x/w)^2},  v0 = A_v e^{-(x/w_v)^2}.
/// Throws ResolutionError when a width spans fewer than 8 grid points.
std::pair<ComplexField, RealField> gaussian_pair(const DataRecipe& recipe, const SpectralGrid& grid);

/// Random complex field with coefficients <xi_k>^{-(s+1/2+extra)} g_k, g_k
/// standard complex Gaussians, rescaled to ||u||_{H^s} = norm_target.
///
/// Modes are drawn in the order 0, 1, -1, 2, -2, ... so refining the grid at
/// fixed length keeps every coarse coefficient and only appends new ones.
/// The Nyquist mode is zero.
ComplexField rough_random(double s, std::uint64_t seed, const SpectralGrid& grid,
                          double norm_target, double extra_decay = 0.0);

/// Real companion for v0 in H^{s-1/2}: decay <xi>^{-(s+extra)}, Hermitian
/// symmetric spectrum, rescaled to ||v||_{H^{s-1/2}} = norm_target.
RealField rough_random_real(double s, std::uint64_t seed, const SpectralGrid& grid,
                            double norm_target, double extra_decay = 0.0);

/// Builds (u0, v0) for any recipe kind.
std::pair<ComplexField, RealField> make_initial_pair(const DataRecipe& recipe, const SpectralGrid& grid);

}  // namespace sbo
