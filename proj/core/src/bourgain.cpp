#include "sbo/bourgain.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "sbo/errors.hpp"
#include "sbo/operators.hpp"

namespace sbo {

double TimeWindow::taper(std::size_t m) const noexcept {
  if (!hann) return 1.0;
  const double x = std::sin(std::numbers::pi * static_cast<double>(m) / static_cast<double>(points));
  return x * x;
}

double TimeWindow::frequency(std::size_t m) const noexcept {
  const auto n = static_cast<std::ptrdiff_t>(points);
  const auto mm = static_cast<std::ptrdiff_t>(m);
  const auto mode = mm < n / 2 ? mm : mm - n;
  return 2.0 * std::numbers::pi / length * static_cast<double>(mode);
}

void TimeWindow::validate() const {
  if (!(length > 0.0)) throw ParameterError("time window length must be positive");
  if (points < 2 || points % 2 != 0) throw ParameterError("time window point count must be even");
}

SpaceTimeSample::SpaceTimeSample(SpectralGrid grid, TimeWindow window, std::vector<cplx> values)
    : grid_(grid), window_(window), values_(std::move(values)) {
  window_.validate();
  if (values_.size() != grid_.points() * window_.points)
    throw std::invalid_argument("SpaceTimeSample: value count does not match grid x window");
}

namespace {

template <class Phase>
std::vector<cplx> sample_flow(const SpectralGrid& grid, const Spectrum& c, const TimeWindow& w, Phase&& phase) {
  const std::size_t nx = grid.points();
  std::vector<cplx> values(nx * w.points);
  Spectrum ct(nx);
  for (std::size_t m = 0; m < w.points; ++m) {
    const double t = w.time(m);
    for (std::size_t k = 0; k < nx; ++k) ct[k] = c[k] * std::polar(1.0, phase(grid.wavenumber(k)) * t);
    const auto row = fft::inverse(ct);
    std::copy(row.begin(), row.end(), values.begin() + static_cast<std::ptrdiff_t>(m * nx));
  }
  return values;
}

// L T sum w(xi, tau)^2 |C|^2 over the 2-D spectrum of the tapered sample.
template <class Weight>
double weighted_norm(const SpaceTimeSample& f, Weight&& weight) {
  const auto& grid = f.grid();
  const auto& win = f.window();
  const std::size_t nx = grid.points();
  std::vector<cplx> tapered(f.values().begin(), f.values().end());
  for (std::size_t m = 0; m < win.points; ++m) {
    const double w = win.taper(m);
    for (std::size_t j = 0; j < nx; ++j) tapered[m * nx + j] *= w;
  }
  const auto C = fft::forward_2d(tapered, win.points, nx);
  double sum = 0.0;
  for (std::size_t m = 0; m < win.points; ++m) {
    const double tau = win.frequency(m);
    for (std::size_t k = 0; k < nx; ++k) {
      const double w = weight(grid.wavenumber(k), tau);
      sum += w * w * std::norm(C[m * nx + k]);
    }
  }
  return std::sqrt(grid.length() * win.length * sum);
}

double weight_power(double base, double e) { return e == 0.0 ? 1.0 : std::pow(base, e); }

void require_compatible(const SpaceTimeSample& a, const SpaceTimeSample& b) {
  if (!(a.grid() == b.grid()) || a.window().points != b.window().points || a.window().length != b.window().length)
    throw std::invalid_argument("space-time samples live on different grids or windows");
}

double safe_ratio(double num, double den) { return num == 0.0 ? 0.0 : num / den; }

std::mt19937_64 sample_engine(std::uint64_t seed, std::uint64_t id, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(id), static_cast<std::uint32_t>(id >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

struct PacketShape {
  double centre, width, modulation, phase;
};

PacketShape draw_shape(std::mt19937_64& engine, const SpectralGrid& grid, const ProbeSettings& s) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  PacketShape p{};
  p.centre = (unit(engine) - 0.5) * 0.5 * grid.length();
  p.width = s.min_width + (s.max_width - s.min_width) * unit(engine);
  p.modulation = (2.0 * unit(engine) - 1.0) * s.max_modulation;
  p.phase = 2.0 * std::numbers::pi * unit(engine);
  return p;
}

template <SpectralField F>
F normalized(F f) {
  const double n = l2_norm(f);
  if (n > 0.0)
    for (auto& x : f.values()) x /= n;
  return f;
}

}  // namespace

SpaceTimeSample SpaceTimeSample::free_schrodinger(const ComplexField& u0, const TimeWindow& window) {
  window.validate();
  return {u0.grid(), window, sample_flow(u0.grid(), u0.spectrum(), window, [](double xi) { return -xi * xi; })};
}

SpaceTimeSample SpaceTimeSample::free_bo(const RealField& v0, double nu, const TimeWindow& window) {
  window.validate();
  auto values = sample_flow(v0.grid(), v0.spectrum(), window, [nu](double xi) { return -nu * xi * std::abs(xi); });
  for (auto& z : values) z = cplx(z.real());
  return {v0.grid(), window, std::move(values)};
}

SpaceTimeSample SpaceTimeSample::scaled(double c) const {
  std::vector<cplx> v(values_);
  for (auto& z : v) z *= c;
  return {grid_, window_, std::move(v)};
}

SpaceTimeSample multiply(const SpaceTimeSample& a, const SpaceTimeSample& b) {
  require_compatible(a, b);
  std::vector<cplx> v(a.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values()[i] * b.values()[i];
  return {a.grid(), a.window(), std::move(v)};
}

SpaceTimeSample multiply_conj(const SpaceTimeSample& a, const SpaceTimeSample& b) {
  require_compatible(a, b);
  std::vector<cplx> v(a.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values()[i] * std::conj(b.values()[i]);
  return {a.grid(), a.window(), std::move(v)};
}

double spacetime_norm_x(const SpaceTimeSample& f, double s, double b) {
  return weighted_norm(f, [s, b](double xi, double tau) {
    return weight_power(bracket(tau + xi * xi), b) * weight_power(bracket(xi), s);
  });
}

double spacetime_norm_y(const SpaceTimeSample& f, double s, double b, double nu) {
  return weighted_norm(f, [s, b, nu](double xi, double tau) {
    return weight_power(bracket(tau + nu * xi * std::abs(xi)), b) * weight_power(bracket(xi), s);
  });
}

double windowed_l2(const SpaceTimeSample& f) {
  const auto& win = f.window();
  const std::size_t nx = f.grid().points();
  double sum = 0.0;
  for (std::size_t m = 0; m < win.points; ++m) {
    const double w = win.taper(m);
    for (std::size_t j = 0; j < nx; ++j) sum += w * w * std::norm(f.at(m, j));
  }
  return std::sqrt(f.grid().spacing() * win.spacing() * sum);
}

double spacetime_lebesgue(const SpaceTimeSample& f, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& z : f.values()) m = std::max(m, std::abs(z));
    return m;
  }
  double sum = 0.0;
  for (const auto& z : f.values()) sum += std::pow(std::abs(z), p);
  return std::pow(f.grid().spacing() * f.window().spacing() * sum, 1.0 / p);
}

double probe_strichartz(const ComplexField& u0, Flow flow, const TimeWindow& window, double p, double nu) {
  window.validate();
  const double base = l2_norm(u0);
  if (base == 0.0) return 0.0;
  const auto symbol = [flow, nu](double xi) {
    return flow == Flow::Schrodinger ? -xi * xi : -nu * xi * std::abs(xi);
  };
  const SpaceTimeSample sample(u0.grid(), window, sample_flow(u0.grid(), u0.spectrum(), window, symbol));
  return spacetime_lebesgue(sample, p) / base;
}

double probe_bilinear_smoothing(const SpaceTimeSample& u1, const SpaceTimeSample& u2, double b) {
  const auto prod = multiply_conj(u1, u2);
  const double lhs = weighted_norm(prod, [](double xi, double) { return std::sqrt(std::abs(xi)); });
  return safe_ratio(lhs, spacetime_norm_x(u1, 0.0, b) * spacetime_norm_x(u2, 0.0, b));
}

ProductProbe probe_product_estimate(const SpaceTimeSample& u, const SpaceTimeSample& v, double s, double a,
                                    double b, double nu) {
  ProductProbe out;
  out.outside_hypothesis = std::abs(nu) == 1.0 && s <= 1.0 - 2.0 * std::abs(a);
  const double lhs = spacetime_norm_x(multiply(u, v), s, a);
  out.ratio = safe_ratio(lhs, spacetime_norm_x(u, s, b) * spacetime_norm_y(v, s - 0.5, b, nu));
  return out;
}

double probe_burgers_term(const SpaceTimeSample& u, double s, double b, double nu) {
  const auto density = multiply_conj(u, u);
  // b = 0: the Y weight reduces to <xi>^{s-1/2}, independent of nu.
  (void)nu;
  const double lhs = weighted_norm(density, [s](double xi, double) {
    return std::abs(xi) * weight_power(bracket(xi), s - 0.5);
  });
  const double x = spacetime_norm_x(u, s, b);
  return safe_ratio(lhs, x * x);
}

ProbeKind parse_probe_kind(std::string_view name) {
  if (name == "strichartz-schrodinger") return ProbeKind::StrichartzSchrodinger;
  if (name == "strichartz-bo") return ProbeKind::StrichartzBo;
  if (name == "bilinear") return ProbeKind::Bilinear;
  if (name == "product") return ProbeKind::Product;
  if (name == "burgers") return ProbeKind::Burgers;
  throw ParameterError("unknown probe '" + std::string(name) + "'");
}

std::string_view to_string(ProbeKind kind) {
  switch (kind) {
    case ProbeKind::StrichartzSchrodinger: return "strichartz-schrodinger";
    case ProbeKind::StrichartzBo: return "strichartz-bo";
    case ProbeKind::Bilinear: return "bilinear";
    case ProbeKind::Product: return "product";
    case ProbeKind::Burgers: return "burgers";
  }
  return "?";
}

ComplexField random_packet(const SpectralGrid& grid, std::uint64_t seed, const ProbeSettings& settings) {
  auto engine = sample_engine(seed, 0, 0);
  const auto p = draw_shape(engine, grid, settings);
  return normalized(ComplexField::from_function(grid, [&](double x) {
    const double r = (x - p.centre) / p.width;
    return std::exp(-r * r) * std::polar(1.0, p.modulation * x + p.phase);
  }));
}

RealField random_real_packet(const SpectralGrid& grid, std::uint64_t seed, const ProbeSettings& settings) {
  auto engine = sample_engine(seed, 0, 1);
  const auto p = draw_shape(engine, grid, settings);
  return normalized(RealField::from_function(grid, [&](double x) {
    const double r = (x - p.centre) / p.width;
    return std::exp(-r * r) * std::cos(p.modulation * x + p.phase);
  }));
}

double probe_sample(ProbeKind kind, const ProbeSettings& st, std::uint64_t seed, std::uint64_t id) {
  // Distinct, reproducible seeds per sample and per role.
  const std::uint64_t base = seed * 0x9E3779B97F4A7C15ull + id * 4;
  const auto& w = st.window;
  switch (kind) {
    case ProbeKind::StrichartzSchrodinger:
      return probe_strichartz(random_packet(st.grid, base, st), Flow::Schrodinger, w, st.p);
    case ProbeKind::StrichartzBo:
      return probe_strichartz(random_packet(st.grid, base, st), Flow::BenjaminOno, w, st.p, st.nu);
    case ProbeKind::Bilinear: {
      const auto u1 = SpaceTimeSample::free_schrodinger(random_packet(st.grid, base, st), w);
      const auto u2 = SpaceTimeSample::free_schrodinger(random_packet(st.grid, base + 1, st), w);
      return probe_bilinear_smoothing(u1, u2, st.b);
    }
    case ProbeKind::Product: {
      const auto u = SpaceTimeSample::free_schrodinger(random_packet(st.grid, base, st), w);
      const auto v = SpaceTimeSample::free_bo(random_real_packet(st.grid, base + 2, st), st.nu, w);
      return probe_product_estimate(u, v, st.s, st.a, st.b, st.nu).ratio;
    }
    case ProbeKind::Burgers: {
      const auto u = SpaceTimeSample::free_schrodinger(random_packet(st.grid, base, st), w);
      return probe_burgers_term(u, st.s, st.b, st.nu);
    }
  }
  return 0.0;
}

}  // namespace sbo
