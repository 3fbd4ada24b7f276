// Acceptance criteria A1-A10. Prints one PASS/FAIL line per criterion and
// exits nonzero when any criterion fails. Usage: acceptance [A1 A5 ...]

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sbo/bourgain.hpp>
#include <sbo/errors.hpp>
#include <sbo/evolve.hpp>
#include <sbo/functionals.hpp>
#include <sbo/imethod.hpp>
#include <sbo/initial_data.hpp>
#include <sbo/multiplier.hpp>
#include <sbo/operators.hpp>

#include "oracles.hpp"

using namespace sbo;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

SBOState smooth_state(const SpectralGrid& g, double xi0) {
  DataRecipe r;
  r.kind = xi0 == 0.0 ? DataKind::Gaussian : DataKind::ModulatedGaussian;
  r.amplitude = 1.0;
  r.width = 2.0;
  r.modulation = xi0;
  r.v_amplitude = 0.5;
  r.v_width = 2.0;
  auto [u, v] = make_initial_pair(r, g);
  return {std::move(u), std::move(v), 0.0};
}

// A1: drift of M, L, E at dt = 1e-3 and its reduction under dt -> dt/2.
Outcome a1() {
  const auto g = make_grid(64 * pi, 1024);
  const auto s0 = smooth_state(g, 0.0);
  const SystemParams p{1.0, -1.0, 1.0};
  const auto base = snapshot(s0.u, s0.v, p);
  auto drift = [&](double dt) {
    const auto e = evolve(s0, p, StepperConfig{dt}, 1.0);
    const auto f = snapshot(e.u, e.v, p);
    return std::array<double, 3>{std::abs(f.mass - base.mass) / base.mass, std::abs(f.ell - base.ell) / std::abs(base.ell),
                                 std::abs(f.energy - base.energy) / std::abs(base.energy)};
  };
  const auto d1 = drift(1e-3);
  const auto d2 = drift(5e-4);
  bool ok = true;
  std::string detail;
  const char* names[3] = {"M", "L", "E"};
  for (int i = 0; i < 3; ++i) {
    const double ratio = d1[i] / d2[i];
    ok = ok && d1[i] <= 1e-7 && ratio >= 8.0;
    detail += fmt("%s drift %.2e -> %.2e (x%.1f); ", names[i], d1[i], d2[i], ratio);
  }
  return {ok, detail};
}

// A2: both free flows preserve L2 and H1 norms.
Outcome a2() {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> time(0.0, 10.0);
  std::uniform_real_distribution<double> len(5.0, 60.0);
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto g = make_grid(len(gen), 128);
    const double t = time(gen);
    const auto u = oracle::random_field(g, i);
    const auto v = oracle::random_real_field(g, 1000 + i);
    const auto ut = linear_flow_schrodinger(u, t);
    const auto vt = linear_flow_bo(v, t, 1.0);
    for (double s : {0.0, 1.0}) {
      worst = std::max(worst, std::abs(sobolev_norm(ut, s) / sobolev_norm(u, s) - 1.0));
      worst = std::max(worst, std::abs(sobolev_norm(vt, s) / sobolev_norm(v, s) - 1.0));
    }
  }
  return {worst <= 1e-12, fmt("max relative norm change %.2e", worst)};
}

// A3: solving then scaling equals scaling then solving.
Outcome a3() {
  const auto g = make_grid(16 * pi, 256);
  const auto s0 = smooth_state(g, 1.0);
  const SystemParams p{1.0, -1.0, 1.0};
  const double t = 0.25;
  const StepperConfig cfg{1e-3};
  double worst = 0.0;
  for (double lam : {2.0, 4.0}) {
    const auto solved = evolve(s0, p, cfg, t);
    const auto [su, sv] = scale_pair(solved.u, solved.v, lam);
    const auto [u0, v0] = scale_pair(s0.u, s0.v, lam);
    StepperConfig scaled = cfg;
    scaled.dt = cfg.dt * lam * lam;
    const auto other = evolve(SBOState{u0, v0, 0.0}, p, scaled, t * lam * lam);
    worst = std::max({worst, oracle::relative_difference(other.u, su), oracle::relative_difference(other.v, sv)});
  }
  return {worst <= 1e-6, fmt("max relative L2 difference %.2e", worst)};
}

// A4: pointwise sandwich and the norm inequalities it implies.
Outcome a4() {
  bool ok = true;
  double worst_low = 0.0, worst_high = 0.0;
  const auto g = make_grid(2 * pi, 1024);
  for (double N : {4.0, 16.0, 64.0}) {
    for (double s : {0.35, 0.5, 0.75}) {
      const MultiplierProfile m(N, s);
      for (double xi : g.frequencies()) {
        const double b = bracket(xi);
        ok = ok && std::pow(b, s) <= m(xi) * b * (1 + 1e-14) &&
             m(xi) * b <= 2 * std::pow(N, 1 - s) * std::pow(b, s) * (1 + 1e-14);
      }
      for (std::uint64_t i = 0; i < 50; ++i) {
        const auto u = rough_random(s, i, g, 1.0);
        const double hs = sobolev_norm(u, s);
        const double ih1 = sobolev_norm(apply_I(m, u), 1.0);
        worst_low = std::max(worst_low, hs / ih1);
        worst_high = std::max(worst_high, ih1 / (std::pow(N, 1 - s) * hs));
        ok = ok && hs <= ih1 * (1 + 1e-12) && ih1 <= 2 * std::pow(N, 1 - s) * hs;
      }
    }
  }
  return {ok, fmt("max ||u||_Hs/||Iu||_H1 = %.3f, max ||Iu||_H1/(N^(1-s)||u||_Hs) = %.3f", worst_low, worst_high)};
}

// A5: median slope of the modified-functional increment against N.
Outcome a5() {
  const std::vector<double> ladder{8, 16, 32, 64};
  const SystemParams p{1.0, -1.0, 1.0};
  auto median_slope = [&](std::size_t points) {
    const auto g = make_grid(2 * pi, points);
    std::vector<double> slopes;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      DataRecipe r;
      r.kind = DataKind::RoughRandom;
      r.target_s = 0.4;
      r.seed = seed;
      r.u_norm = 1.0;
      r.v_norm = 1.0;
      const auto res = run_almost_conservation(r, g, p, StepperConfig{5e-6}, ladder, 0.1);
      slopes.push_back(res.degenerate ? std::nan("") : res.slope);
    }
    return median(slopes);
  };
  const double s1 = median_slope(1024);
  const double s2 = median_slope(2048);
  const bool ok = s1 <= -0.8 && std::abs(s2 - s1) <= 0.15;
  return {ok, fmt("median slope %.3f at 1024 points, %.3f at 2048 (shift %.3f)", s1, s2, s2 - s1)};
}

// A6: continuation slope, growth exponents, threshold rejection.
Outcome a6() {
  std::vector<double> ts{1, 2, 4, 8}, ns;
  for (double T : ts) ns.push_back(continuation_plan(T, 0.5, 1.0, 1.0, 1.0).N);
  const double slope = loglog_slope(ts, ns);
  const auto [eu, ev] = growth_exponents(0.5);
  bool rejected = false;
  try {
    continuation_plan(1.0, 1.0 / 3.0, 1.0, 1.0, 1.0);
  } catch (const InfeasibleRegimeError&) {
    rejected = true;
  }
  const bool ok = std::abs(slope - 3.0) <= 0.1 && eu == 1.5 && ev == 1.5 && rejected;
  return {ok, fmt("slope %.4f, growth (%.17g, %.17g), s = 1/3 %s", slope, eu, ev, rejected ? "rejected" : "accepted")};
}

// A7: centered differences of E(Iu,Iv), L(Iu,Iv) against the derivative terms.
Outcome a7() {
  const auto g = make_grid(32 * pi, 512);
  const auto s0 = smooth_state(g, 1.0);
  const SystemParams p{1.0, -1.0, 1.0};
  const MultiplierProfile prof(2.0, 0.5);
  const double t0 = 0.5;
  const std::vector<double> hs{1e-2, 3e-3, 1e-3, 3e-4, 1e-4};
  std::vector<double> err_e, err_l;
  for (double h : hs) {
    const auto a = evolve(s0, p, StepperConfig{1e-3}, t0 - h);
    const StepperConfig fine{h / 20};
    const auto b = evolve(a, p, fine, h);
    const auto c = evolve(b, p, fine, h);
    const auto ma = modified_snapshot(a.u, a.v, prof, p);
    const auto mc = modified_snapshot(c.u, c.v, prof, p);
    const auto terms = energy_increment_rhs(b.u, b.v, prof, p);
    const double de = (mc.energy - ma.energy) / (2 * h);
    const double dl = (mc.ell - ma.ell) / (2 * h);
    err_e.push_back(std::abs(de - (terms[0] + terms[1] + terms[2] + terms[3])));
    err_l.push_back(std::abs(dl - ell_increment_rhs(b.u, b.v, prof, p)));
  }
  const double se = loglog_slope(hs, err_e);
  const double sl = loglog_slope(hs, err_l);
  const bool ok = std::abs(se - 2.0) <= 0.2 && std::abs(sl - 2.0) <= 0.2;
  return {ok, fmt("slope E %.3f, slope L %.3f (errors at h=1e-4: %.2e, %.2e)", se, sl, err_e.back(), err_l.back())};
}

// A8: long-wave norm ratio for smooth and rough data.
Outcome a8() {
  double worst = 0.0;
  const auto smooth = smooth_state(make_grid(16 * pi, 512), 0.0).v;
  for (double s : {0.35, 0.45}) {
    const auto rough = rough_random_real(s, 7, make_grid(2 * pi, 512), 1.0);
    for (double lam : {1.0, 2.0, 4.0, 8.0, 16.0}) {
      worst = std::max(worst, long_wave_ratio(smooth, lam, s));
      worst = std::max(worst, long_wave_ratio(rough, lam, s));
    }
  }
  return {worst <= 4.0, fmt("max ratio %.4f", worst)};
}

// A9: batch maxima of each probe move less than 15% from 200 to 400 samples.
Outcome a9() {
  struct Case {
    ProbeKind kind;
    double nu;
  };
  const std::vector<Case> cases{{ProbeKind::StrichartzSchrodinger, 1.0},
                                {ProbeKind::StrichartzBo, 1.0},
                                {ProbeKind::Bilinear, 1.0},
                                {ProbeKind::Product, 1.0},
                                {ProbeKind::Product, 2.0},
                                {ProbeKind::Burgers, 1.0}};
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    ProbeSettings st;
    st.nu = c.nu;
    double m200 = 0.0, m400 = 0.0;
    for (std::uint64_t id = 0; id < 400; ++id) {
      const double r = probe_sample(c.kind, st, 0, id);
      if (id < 200) m200 = std::max(m200, r);
      m400 = std::max(m400, r);
    }
    const double change = (m400 - m200) / m200;
    ok = ok && std::isfinite(change) && change < 0.15;
    detail += fmt("%s(nu=%g) %.1f%%; ", std::string(to_string(c.kind)).c_str(), c.nu, 100 * change);
  }
  return {ok, detail};
}

// A10: the CLI produces byte-identical outputs with 1 and 4 worker threads.
Outcome a10() {
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / "sbo_acceptance_a10";
  fs::remove_all(root);
  fs::create_directories(root);
  const fs::path cfg = root / "decay.yaml";
  {
    std::ofstream f(cfg);
    f << "experiment: imethod-decay\n"
         "grid: {length: 6.283185307179586, points: 256}\n"
         "data: {kind: rough-random, s: 0.4, seed: 3}\n"
         "stepper: {dt: 1.0e-4}\n"
         "decay: {ladder: [4, 8, 16], delta: 0.02, seeds: 6}\n";
  }
  const fs::path probe = root / "probe.yaml";
  {
    std::ofstream f(probe);
    f << "experiment: estimate-probe\n"
         "probe: {batches: [16, 32], points: 64, window: {points: 64}}\n";
  }
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  bool ok = true;
  std::size_t compared = 0;
  for (const auto& [exp, file] : {std::pair{"imethod-decay", cfg}, std::pair{"estimate-probe", probe}}) {
    std::vector<fs::path> dirs;
    for (int threads : {1, 4}) {
      const fs::path out = root / (std::string(exp) + "_" + std::to_string(threads));
      const std::string cmd = std::string(SBO_CLI) + " " + exp + " --config " + file.string() + " --out " +
                              out.string() + " --threads " + std::to_string(threads) + " 2>/dev/null";
      if (std::system(cmd.c_str()) != 0) ok = false;
      dirs.push_back(out);
    }
    if (slurp(dirs[0] / "manifest.json") != slurp(dirs[1] / "manifest.json")) ok = false;
    for (const auto& e : fs::directory_iterator(dirs[0])) {
      const auto name = e.path().filename();
      if (slurp(e.path()) != slurp(dirs[1] / name)) ok = false;
      ++compared;
    }
  }
  return {ok && compared > 0, fmt("%zu files compared", compared)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4}, {"A5", a5},
      {"A6", a6}, {"A7", a7}, {"A8", a8}, {"A9", a9}, {"A10", a10}};
  std::set<std::string> only(argv + 1, argv + argc);
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    if (!only.empty() && !only.count(name)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%-4s %s  %s [%.1fs]\n", name.c_str(), o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
