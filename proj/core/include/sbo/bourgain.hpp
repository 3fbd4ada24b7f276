#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "sbo/field.hpp"

namespace sbo {

/// Uniform time window [0, length) with `points` samples. The Hann taper
/// sin^2(pi t / length) is applied before any transform in t.
struct TimeWindow {
  double length = 6.283185307179586;
  std::size_t points = 256;
  bool hann = true;

  double spacing() const noexcept { return length / static_cast<double>(points); }
  double time(std::size_t m) const noexcept { return static_cast<double>(m) * spacing(); }
  double taper(std::size_t m) const noexcept;
  double frequency(std::size_t m) const noexcept;
  void validate() const;
};

/// Space-time samples f(x_j, t_m), stored row-major with time as the slow index.
class SpaceTimeSample {
 public:
  SpaceTimeSample(SpectralGrid grid, TimeWindow window, std::vector<cplx> values);

  /// e^{it d_x^2} u0 sampled on the window.
  static SpaceTimeSample free_schrodinger(const ComplexField& u0, const TimeWindow& window);
  /// e^{-nu t d_x |d_x|} v0 sampled on the window.
  static SpaceTimeSample free_bo(const RealField& v0, double nu, const TimeWindow& window);

  const SpectralGrid& grid() const noexcept { return grid_; }
  const TimeWindow& window() const noexcept { return window_; }
  std::span<const cplx> values() const noexcept { return values_; }
  cplx at(std::size_t m, std::size_t j) const noexcept { return values_[m * grid_.points() + j]; }

  SpaceTimeSample scaled(double c) const;

 private:
  SpectralGrid grid_;
  TimeWindow window_;
  std::vector<cplx> values_;
};

/// Pointwise products of two samples on the same grid and window.
SpaceTimeSample multiply(const SpaceTimeSample& a, const SpaceTimeSample& b);
SpaceTimeSample multiply_conj(const SpaceTimeSample& a, const SpaceTimeSample& b);

/// || <tau + xi^2>^b <xi>^s f^(xi, tau) ||_{L^2} of the tapered sample.
double spacetime_norm_x(const SpaceTimeSample& f, double s, double b);
/// || <tau + nu xi |xi|>^b <xi>^s f^(xi, tau) ||_{L^2} of the tapered sample.
double spacetime_norm_y(const SpaceTimeSample& f, double s, double b, double nu);
/// Tapered space-time L^2 norm by the rectangle rule.
double windowed_l2(const SpaceTimeSample& f);
/// Untapered L^p_{xt} norm over grid x window.
double spacetime_lebesgue(const SpaceTimeSample& f, double p);

enum class Flow { Schrodinger, BenjaminOno };

/// ||free evolution of u0||_{L^p_{xt}} / ||u0||_{L^2} over the window.
double probe_strichartz(const ComplexField& u0, Flow flow, const TimeWindow& window, double p = 6.0,
                        double nu = 1.0);

/// ||D_x^{1/2}(u1 conj u2)||_{L^2_{xt}} / (||u1||_{X^{0,b}} ||u2||_{X^{0,b}})
double probe_bilinear_smoothing(const SpaceTimeSample& u1, const SpaceTimeSample& u2, double b = 0.6);

struct ProductProbe {
  double ratio = 0.0;
  /// Set when |nu| = 1 and s <= 1 - 2|a|, outside the hypothesis of the estimate.
  bool outside_hypothesis = false;
};

/// ||u v||_{X^{s,a}} / (||u||_{X^{s,b}} ||v||_{Y^{s-1/2,b}}), a < 0.
ProductProbe probe_product_estimate(const SpaceTimeSample& u, const SpaceTimeSample& v, double s, double a,
                                    double b, double nu);

/// ||(|u|^2)_x||_{Y^{s-1/2,0}} / ||u||_{X^{s,b}}^2
double probe_burgers_term(const SpaceTimeSample& u, double s, double b, double nu = 1.0);

enum class ProbeKind { StrichartzSchrodinger, StrichartzBo, Bilinear, Product, Burgers };

ProbeKind parse_probe_kind(std::string_view name);
std::string_view to_string(ProbeKind kind);

/// Random test data and parameters for batch probes. Samples are free
/// evolutions of Gaussian wave packets with random centre, width,
/// modulation and phase, L^2-normalized.
struct ProbeSettings {
  SpectralGrid grid{8.0 * 3.141592653589793, 128};
  TimeWindow window{};
  double min_width = 1.5;
  double max_width = 3.0;
  double max_modulation = 2.0;
  double s = 0.5;
  double a = -0.3;
  double b = 0.6;
  double nu = 1.0;
  double p = 6.0;
};

ComplexField random_packet(const SpectralGrid& grid, std::uint64_t seed, const ProbeSettings& settings);
RealField random_real_packet(const SpectralGrid& grid, std::uint64_t seed, const ProbeSettings& settings);

/// Ratio of one probe on the sample with index `id` (deterministic in id and seed).
double probe_sample(ProbeKind kind, const ProbeSettings& settings, std::uint64_t seed, std::uint64_t id);

}  // namespace sbo
