#include "sbo/multiplier.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sbo/errors.hpp"

namespace sbo {

Blend parse_blend(std::string_view name) {
  if (name == "sharp-min") return Blend::SharpMin;
  if (name == "smooth") return Blend::Smooth;
  throw ParameterError("unknown multiplier blend '" + std::string(name) + "'");
}

std::string_view to_string(Blend blend) {
  return blend == Blend::SharpMin ? "sharp-min" : "smooth";
}

MultiplierProfile::MultiplierProfile(double cutoff, double regularity, Blend blend)
    : cutoff_(cutoff), regularity_(regularity), blend_(blend) {
  if (!(cutoff >= 1.0)) throw ParameterError("multiplier cutoff N must be >= 1");
  if (!(regularity > 0.0 && regularity <= 1.0))
    throw ParameterError("multiplier regularity s must lie in (0, 1]");
}

double MultiplierProfile::operator()(double xi) const noexcept {
  const double a = std::abs(xi);
  if (a <= cutoff_) return 1.0;
  const double decay = 1.0 - regularity_;
  if (blend_ == Blend::SharpMin || a >= 2.0 * cutoff_) return std::pow(cutoff_ / a, decay);

  // Hermite cubic in t = log2(|xi|/N) with p(0) = 1, p'(0) = 0,
  // p(1) = 2^{-(1-s)} and p'(1) matching the power-law branch.
  const double t = std::log2(a / cutoff_);
  const double end = std::pow(0.5, decay);
  const double slope = -decay * end * std::numbers::ln2;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  const double h01 = -2.0 * t3 + 3.0 * t2;
  const double h11 = t3 - t2;
  return h00 + h01 * end + h11 * slope;
}

}  // namespace sbo
