#pragma once

#include <string_view>

#include "sbo/operators.hpp"

namespace sbo {

/// Shape of the multiplier on the transition band N <= |xi| <= 2N.
enum class Blend {
  SharpMin,  ///< min(1, (N/|xi|)^{1-s})
  Smooth,    ///< cubic Hermite in log|xi|, C^1 at both band edges
};

Blend parse_blend(std::string_view name);
std::string_view to_string(Blend blend);

/// Symbol m_N of the smoothing operator I_N: equal to 1 for |xi| <= N and to
/// (N/|xi|)^{1-s} for |xi| >= 2N, radial and nonincreasing in between.
class MultiplierProfile {
 public:
  MultiplierProfile(double cutoff, double regularity, Blend blend = Blend::SharpMin);

  double cutoff() const noexcept { return cutoff_; }
  double regularity() const noexcept { return regularity_; }
  Blend blend() const noexcept { return blend_; }

  double operator()(double xi) const noexcept;

  bool operator==(const MultiplierProfile&) const = default;

 private:
  double cutoff_;
  double regularity_;
  Blend blend_;
};

inline double multiplier_value(const MultiplierProfile& p, double xi) { return p(xi); }

/// (I_N f)^ = m_N f^
template <SpectralField F>
F apply_I(const MultiplierProfile& p, const F& f) {
  return apply_symbol(f, [&p](double xi) { return cplx(p(xi)); });
}

}  // namespace sbo
