#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include <sbo/errors.hpp>
#include <sbo/field_io.hpp>
#include <sbo/grid.hpp>
#include <sbo/multiplier.hpp>
#include <sbo/operators.hpp>

#include "oracles.hpp"

using namespace sbo;
using std::numbers::pi;

TEST_CASE("make_grid: frequencies and bounds") {
  const auto g = make_grid(2 * pi, 8);
  const auto xi = g.frequencies();
  const std::vector<double> expected{-4, -3, -2, -1, 0, 1, 2, 3};
  REQUIRE(xi.size() == 8);
  for (std::size_t k = 0; k < 8; ++k) CHECK(xi[k] == doctest::Approx(expected[k]).epsilon(1e-15));
  CHECK(g.node(0) == doctest::Approx(-pi));
  CHECK(g.node(4) == doctest::Approx(0.0));

  CHECK(make_grid(64 * pi, 1024).max_frequency() == doctest::Approx(16.0).epsilon(1e-15));
  CHECK_THROWS_AS(make_grid(1.0, 7), ParameterError);
  CHECK_THROWS_AS(make_grid(1.0, 6), ParameterError);
  CHECK_THROWS_AS(make_grid(0.0, 16), ParameterError);
  CHECK_THROWS_AS(make_grid(-1.0, 16), ParameterError);
}

TEST_CASE("grid nodes are uniform") {
  const auto g = make_grid(10.0, 64);
  const auto x = g.nodes();
  for (std::size_t j = 1; j < x.size(); ++j) CHECK(x[j] - x[j - 1] == doctest::Approx(g.spacing()).epsilon(1e-13));
}

TEST_CASE("Parseval on random fields") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = make_grid(7.0 + static_cast<double>(seed), 128);
    const auto f = oracle::random_field(g, seed);
    double phys = 0.0;
    for (auto z : f.values()) phys += std::norm(z);
    phys *= g.spacing();
    double spec = 0.0;
    for (auto c : f.spectrum()) spec += std::norm(c);
    spec *= g.length();
    CHECK(std::abs(phys - spec) / phys < 1e-12);
    CHECK(l2_norm(f) == doctest::Approx(std::sqrt(phys)).epsilon(1e-12));
  }
}

TEST_CASE("real fields have Hermitian spectra") {
  const auto g = make_grid(2 * pi, 64);
  const auto v = oracle::random_real_field(g, 3);
  const auto c = v.spectrum();
  for (std::size_t k = 1; k < g.points() / 2; ++k)
    CHECK(std::abs(c[k] - std::conj(c[g.points() - k])) < 1e-14);
}

TEST_CASE("derivative") {
  const auto g = make_grid(2 * pi, 64);
  const auto s = RealField::from_function(g, [](double x) { return std::sin(x); });
  const auto ds = derivative(s, 1);
  for (std::size_t j = 0; j < g.points(); ++j) CHECK(std::abs(ds[j] - std::cos(g.node(j))) < 1e-12);

  const auto e = ComplexField::from_function(g, [](double x) { return std::polar(1.0, x); });
  const auto d2 = derivative(e, 2);
  for (std::size_t j = 0; j < g.points(); ++j) CHECK(std::abs(d2[j] + e[j]) < 1e-12);

  const auto one = RealField::from_function(g, [](double) { return 3.0; });
  for (int order = 1; order <= 4; ++order) CHECK(oracle::max_abs(derivative(one, order)) < 1e-13);

  // d(d f) and d^2 f agree coefficient by coefficient
  const auto f = oracle::random_field(g, 11);
  const auto a = derivative(derivative(f, 1), 1).spectrum();
  const auto b = derivative(f, 2).spectrum();
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(std::abs(a[k] - b[k]) <= 1e-12 * (1.0 + std::abs(b[k])));
}

TEST_CASE("half derivative") {
  const auto g = make_grid(2 * pi, 32);
  const auto c1 = RealField::from_function(g, [](double x) { return std::cos(x); });
  const auto c4 = RealField::from_function(g, [](double x) { return std::cos(4 * x); });
  const auto one = RealField::from_function(g, [](double) { return 1.0; });
  CHECK(oracle::relative_difference(half_derivative(c1), c1) < 1e-13);
  const auto h4 = half_derivative(c4);
  for (std::size_t j = 0; j < g.points(); ++j) CHECK(std::abs(h4[j] - 2.0 * c4[j]) < 1e-12);
  CHECK(oracle::max_abs(half_derivative(one)) < 1e-14);
}

TEST_CASE("sobolev_norm") {
  const auto g = make_grid(2 * pi, 64);
  const auto f = oracle::random_field(g, 5);
  CHECK(sobolev_norm(f, 0.0) == doctest::Approx(l2_norm(f)).epsilon(1e-12));

  const auto e = ComplexField::from_function(g, [](double x) { return std::polar(1.0, x); });
  CHECK(sobolev_norm(e, 1.0) == doctest::Approx(std::sqrt(2.0) * l2_norm(e)).epsilon(1e-12));

  const auto big = make_grid(64 * pi, 1024);
  const auto gauss = ComplexField::from_function(big, [](double x) { return std::exp(-x * x); });
  CHECK(sobolev_norm(gauss, 1.0, true) == doctest::Approx(oracle::gaussian_hdot1()).epsilon(1e-10));
  CHECK(oracle::gaussian_hdot1() == doctest::Approx(std::pow(pi / 2, 0.25)).epsilon(1e-12));
}

TEST_CASE("lebesgue_norm") {
  const auto g = make_grid(2 * pi, 16);
  const auto one = RealField::from_function(g, [](double) { return 1.0; });
  CHECK(lebesgue_norm(one, 2.0) == doctest::Approx(std::sqrt(2 * pi)).epsilon(1e-14));
  const auto f = oracle::random_field(g, 2);
  CHECK(lebesgue_norm(f, kInfinity) == oracle::max_abs(f.values()));

  const auto big = make_grid(64 * pi, 1024);
  const auto gauss = RealField::from_function(big, [](double x) { return std::exp(-x * x); });
  const double l4 = oracle::gaussian_l4();
  CHECK(l4 == doctest::Approx(std::pow(std::sqrt(pi) / 2, 0.25)).epsilon(1e-12));
  CHECK(lebesgue_norm(gauss, 4.0) == doctest::Approx(l4).epsilon(1e-10));
}

TEST_CASE("multiplier values") {
  for (auto blend : {Blend::SharpMin, Blend::Smooth}) {
    const MultiplierProfile p(16, 0.5, blend);
    CHECK(p(0.0) == 1.0);
    CHECK(p(16.0) == doctest::Approx(1.0));
    CHECK(p(64.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(p(-64.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(p(32.0) >= std::sqrt(0.5) - 1e-15);
    CHECK(p(32.0) <= 1.0);
  }
  CHECK_THROWS_AS(MultiplierProfile(0.5, 0.5), ParameterError);
  CHECK_THROWS_AS(MultiplierProfile(4, 0.0), ParameterError);
  CHECK_THROWS_AS(MultiplierProfile(4, 1.5), ParameterError);
  CHECK(parse_blend("smooth") == Blend::Smooth);
  CHECK_THROWS(parse_blend("round"));
}

TEST_CASE("multiplier is nonincreasing, positive, and the smooth blend is C1") {
  for (double s : {0.35, 0.5, 0.75, 1.0}) {
    for (double N : {1.0, 4.0, 16.0}) {
      for (auto blend : {Blend::SharpMin, Blend::Smooth}) {
        const MultiplierProfile p(N, s, blend);
        double prev = 1.0;
        for (double xi = 0.0; xi < 8 * N; xi += N / 200.0) {
          const double m = p(xi);
          CHECK(m > 0.0);
          CHECK(m <= prev + 1e-15);
          prev = m;
        }
      }
      const MultiplierProfile p(N, s, Blend::Smooth);
      for (double edge : {N, 2 * N}) {
        const double h = 1e-5 * N;
        const double left = (p(edge) - p(edge - h)) / h;
        const double right = (p(edge + h) - p(edge)) / h;
        CHECK(std::abs(left - right) < 1e-6 * (1.0 + 1.0 / N) + 2e-5 / N);
      }
    }
  }
}

TEST_CASE("multiplier sandwich on every grid frequency") {
  for (double N : {1.0, 4.0, 16.0, 64.0}) {
    for (double s : {0.1, 0.35, 0.5, 0.75, 1.0}) {
      for (auto blend : {Blend::SharpMin, Blend::Smooth}) {
        const MultiplierProfile p(N, s, blend);
        const auto g = make_grid(2 * pi, 1024);
        for (double xi : g.frequencies()) {
          const double b = bracket(xi);
          CHECK(std::pow(b, s) <= p(xi) * b * (1 + 1e-14));
          CHECK(p(xi) * b <= 2.0 * std::pow(N, 1 - s) * std::pow(b, s) * (1 + 1e-14));
        }
      }
    }
  }
}

TEST_CASE("apply_I") {
  const auto g = make_grid(2 * pi, 256);
  const auto f = oracle::random_field(g, 9);
  CHECK(oracle::relative_difference(apply_I(MultiplierProfile(g.max_frequency(), 0.5), f), f) < 1e-14);

  const auto e = ComplexField::from_function(g, [](double x) { return std::polar(1.0, 64 * x); });
  const auto ie = apply_I(MultiplierProfile(16, 0.5), e);
  for (std::size_t j = 0; j < g.points(); ++j) CHECK(std::abs(ie[j] - 0.5 * e[j]) < 1e-12);

  CHECK(oracle::max_abs(apply_I(MultiplierProfile(4, 0.5), ComplexField(g))) == 0.0);

  // commutes with derivative
  const MultiplierProfile p(8, 0.4);
  const auto a = apply_I(p, derivative(f, 1));
  const auto b = derivative(apply_I(p, f), 1);
  CHECK(oracle::relative_difference(a, b) < 1e-13);

  const auto v = oracle::random_real_field(g, 4);
  const auto iv = apply_I(p, v);
  CHECK(iv.grid() == g);
}

TEST_CASE("inner products") {
  const auto g = make_grid(2 * pi, 64);
  const auto f = oracle::random_field(g, 1);
  CHECK(inner_product(f, f).real() == doctest::Approx(l2_norm(f) * l2_norm(f)).epsilon(1e-12));
  CHECK(std::abs(inner_product(f, f).imag()) < 1e-12);
}

TEST_CASE("field io round trips") {
  const auto g = make_grid(3.7, 64);
  const auto f = oracle::random_field(g, 21);
  const auto v = oracle::random_real_field(g, 22);
  {
    std::stringstream ss;
    io::write_binary(ss, f);
    const auto back = io::read_binary(ss);
    CHECK(back == f);
  }
  {
    std::stringstream ss;
    io::write_csv(ss, f);
    const auto back = io::read_csv(ss);
    CHECK(back == f);
  }
  {
    std::stringstream ss;
    io::write_binary(ss, v);
    const auto back = io::to_real(io::read_binary(ss));
    CHECK(back == v);
  }
  std::stringstream bad("nonsense");
  CHECK_THROWS(io::read_binary(bad));
}
