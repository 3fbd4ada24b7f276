#include "sbo/initial_data.hpp"

#include <cmath>
#include <random>
#include <string>

#include "sbo/errors.hpp"
#include "sbo/operators.hpp"

namespace sbo {
namespace {

// Independent streams for u0 and v0 under one user seed.
constexpr std::uint64_t kStreamU = 0x5b0u;
constexpr std::uint64_t kStreamV = 0x5b1u;

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

void check_width(double width, const SpectralGrid& grid, const char* what) {
  // Full 1/e width 2w must span at least 8 nodes.
  if (2.0 * width / grid.spacing() < 8.0)
    throw ResolutionError(std::string(what) + " width " + std::to_string(width) +
                          " is under-resolved (fewer than 8 points across the 1/e width)");
}

std::size_t index_of_mode(std::ptrdiff_t mode, std::size_t n) {
  return mode >= 0 ? static_cast<std::size_t>(mode) : static_cast<std::size_t>(mode + static_cast<std::ptrdiff_t>(n));
}

}  // namespace

DataKind parse_data_kind(std::string_view name) {
  if (name == "gaussian") return DataKind::Gaussian;
  if (name == "modulated-gaussian") return DataKind::ModulatedGaussian;
  if (name == "rough-random") return DataKind::RoughRandom;
  throw ParameterError("unknown data kind '" + std::string(name) + "'");
}

std::string_view to_string(DataKind kind) {
  switch (kind) {
    case DataKind::Gaussian: return "gaussian";
    case DataKind::ModulatedGaussian: return "modulated-gaussian";
    case DataKind::RoughRandom: return "rough-random";
  }
  return "?";
}

void DataRecipe::validate() const {
  if (kind == DataKind::RoughRandom) {
    if (!(target_s > 0.0 && target_s < 1.0)) throw ParameterError("rough-random data needs s in (0, 1)");
    if (!(u_norm >= 0.0) || !(v_norm >= 0.0)) throw ParameterError("rough-random norms must be >= 0");
    return;
  }
  if (!(amplitude >= 0.0) || !(v_amplitude >= 0.0)) throw ParameterError("amplitudes must be >= 0");
  if (!(width > 0.0) || !(v_width > 0.0)) throw ParameterError("widths must be > 0");
}

std::pair<ComplexField, RealField> gaussian_pair(const DataRecipe& recipe, const SpectralGrid& grid) {
  recipe.validate();
  check_width(recipe.width, grid, "u0");
  if (recipe.v_amplitude != 0.0) check_width(recipe.v_width, grid, "v0");
  const double xi0 = recipe.kind == DataKind::Gaussian ? 0.0 : recipe.modulation;
  auto u = ComplexField::from_function(grid, [&](double x) {
    const double r = x / recipe.width;
    return recipe.amplitude * std::exp(-r * r) * std::polar(1.0, xi0 * x);
  });
  auto v = RealField::from_function(grid, [&](double x) {
    const double r = x / recipe.v_width;
    return recipe.v_amplitude * std::exp(-r * r);
  });
  return {std::move(u), std::move(v)};
}

ComplexField rough_random(double s, std::uint64_t seed, const SpectralGrid& grid, double norm_target,
                          double extra_decay) {
  const std::size_t n = grid.points();
  auto engine = make_engine(seed, kStreamU);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double exponent = -(s + 0.5 + extra_decay);
  const double scale = 2.0 * std::numbers::pi / grid.length();

  Spectrum c(n, cplx(0.0));
  auto draw = [&](std::ptrdiff_t mode) {
    const double re = normal(engine);
    const double im = normal(engine);
    const double xi = scale * static_cast<double>(mode);
    c[index_of_mode(mode, n)] = std::pow(bracket(xi), exponent) * cplx(re, im) / std::sqrt(2.0);
  };
  draw(0);
  const auto half = static_cast<std::ptrdiff_t>(n / 2);
  for (std::ptrdiff_t k = 1; k < half; ++k) {
    draw(k);
    draw(-k);
  }
  const double norm = sobolev_norm(grid, c, s);
  if (norm > 0.0)
    for (auto& z : c) z *= norm_target / norm;
  return ComplexField::from_spectrum(grid, c);
}

RealField rough_random_real(double s, std::uint64_t seed, const SpectralGrid& grid, double norm_target,
                            double extra_decay) {
  const std::size_t n = grid.points();
  auto engine = make_engine(seed, kStreamV);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double exponent = -(s + extra_decay);
  const double scale = 2.0 * std::numbers::pi / grid.length();

  Spectrum c(n, cplx(0.0));
  c[0] = cplx(normal(engine));
  const auto half = static_cast<std::ptrdiff_t>(n / 2);
  for (std::ptrdiff_t k = 1; k < half; ++k) {
    const double re = normal(engine);
    const double im = normal(engine);
    const double xi = scale * static_cast<double>(k);
    const cplx z = std::pow(bracket(xi), exponent) * cplx(re, im) / std::sqrt(2.0);
    c[index_of_mode(k, n)] = z;
    c[index_of_mode(-k, n)] = std::conj(z);
  }
  const double norm = sobolev_norm(grid, c, s - 0.5);
  if (norm > 0.0)
    for (auto& z : c) z *= norm_target / norm;
  return RealField::from_spectrum(grid, c);
}

std::pair<ComplexField, RealField> make_initial_pair(const DataRecipe& recipe, const SpectralGrid& grid) {
  recipe.validate();
  if (recipe.kind != DataKind::RoughRandom) return gaussian_pair(recipe, grid);
  return {rough_random(recipe.target_s, recipe.seed, grid, recipe.u_norm, recipe.extra_decay),
          rough_random_real(recipe.target_s, recipe.seed, grid, recipe.v_norm, recipe.extra_decay)};
}

}  // namespace sbo
