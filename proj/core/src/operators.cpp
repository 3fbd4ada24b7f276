#include "sbo/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace sbo {
namespace {

template <class T>
double lp_norm(const SpectralGrid& grid, std::span<const T> values, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& x : values) m = std::max(m, std::abs(x));
    return m;
  }
  if (!(p >= 1.0)) throw std::invalid_argument("lebesgue_norm: p must be in [1, inf]");
  double sum = 0.0;
  if (p == 2.0) {
    for (const auto& x : values) sum += std::norm(x);
    return std::sqrt(grid.spacing() * sum);
  }
  for (const auto& x : values) sum += std::pow(std::abs(x), p);
  return std::pow(grid.spacing() * sum, 1.0 / p);
}

}  // namespace

double sobolev_norm(const SpectralGrid& grid, std::span<const cplx> coeffs, double s,
                    bool homogeneous) {
  double sum = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const double xi = grid.wavenumber(k);
    double w;
    if (homogeneous) {
      if (xi == 0.0) continue;
      w = std::pow(std::abs(xi), 2.0 * s);
    } else {
      w = s == 0.0 ? 1.0 : std::pow(1.0 + xi * xi, s);
    }
    sum += w * std::norm(coeffs[k]);
  }
  return std::sqrt(grid.length() * sum);
}

double lebesgue_norm(const SpectralGrid& grid, std::span<const cplx> values, double p) {
  return lp_norm(grid, values, p);
}

double lebesgue_norm(const SpectralGrid& grid, std::span<const double> values, double p) {
  return lp_norm(grid, values, p);
}

cplx inner_product(const ComplexField& f, const ComplexField& g) {
  cplx sum(0.0);
  for (std::size_t j = 0; j < f.size(); ++j) sum += f[j] * std::conj(g[j]);
  return f.grid().spacing() * sum;
}

double inner_product(const RealField& f, const RealField& g) {
  double sum = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) sum += f[j] * g[j];
  return f.grid().spacing() * sum;
}

}  // namespace sbo
