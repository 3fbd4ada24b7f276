#include "sbo/harness/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <fftw3.h>

#include <sbo/errors.hpp>
#include <sbo/field_io.hpp>
#include <sbo/functionals.hpp>
#include <sbo/operators.hpp>

#include "sbo/harness/output.hpp"
#include "sbo/harness/pool.hpp"

namespace sbo::harness {
namespace {

using nlohmann::json;

class DegenerateFitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double relative_change(double now, double start) {
  const double d = std::abs(now - start);
  return start != 0.0 ? d / std::abs(start) : d;
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

SBOState initial_state(const ExperimentConfig& c) {
  auto [u, v] = make_initial_pair(*c.data, c.spectral_grid());
  return {std::move(u), std::move(v), 0.0};
}

void write_state(OutputSet& out, const SBOState& s, const std::string& tag) {
  std::ostringstream fu, fv;
  io::write_csv(fu, s.u);
  io::write_csv(fv, s.v);
  out.write_text(tag + "_u.csv", fu.str(), "field", "u at t = " + format_double(s.t));
  out.write_text(tag + "_v.csv", fv.str(), "field", "v at t = " + format_double(s.t));
}

// simulate and conserve share the time loop; conserve adds the functionals.
void run_time_series(const ExperimentConfig& c, OutputSet& out, json& results, bool conserve) {
  const auto& run = *c.run;
  const SBOState init = initial_state(c);
  std::optional<MultiplierProfile> profile;
  if (conserve && run.cutoff) profile.emplace(*run.cutoff, run.s, run.blend);

  std::vector<std::string> header{"t", "M", "v_l2", "u_max"};
  if (conserve) {
    for (auto h : {"L", "E", "drift_M", "drift_L", "drift_E"}) header.emplace_back(h);
    if (profile)
      for (auto h : {"L_I", "E_I", "I1", "I2", "I3", "I4", "dL_I"}) header.emplace_back(h);
  }

  std::vector<std::vector<double>> rows;
  // Baseline is the first observed state, i.e. after the dealiasing projection.
  std::optional<FunctionalSnapshot> base;
  double max_drift[3] = {0.0, 0.0, 0.0};

  auto observe = [&](const SBOState& s) {
    std::vector<double> row{s.t, mass(s.u), l2_norm(s.v), lebesgue_norm(s.u, kInfinity)};
    if (conserve) {
      const auto snap = snapshot(s.u, s.v, c.params, s.t);
      if (!base) base = snap;
      const double d[3] = {relative_change(snap.mass, base->mass), relative_change(snap.ell, base->ell),
                           relative_change(snap.energy, base->energy)};
      for (int i = 0; i < 3; ++i) max_drift[i] = std::max(max_drift[i], d[i]);
      row.insert(row.end(), {snap.ell, snap.energy, d[0], d[1], d[2]});
      if (profile) {
        const auto m = modified_snapshot(s.u, s.v, *profile, c.params, s.t);
        const auto terms = energy_increment_rhs(s.u, s.v, *profile, c.params);
        row.insert(row.end(), {m.ell, m.energy, terms[0], terms[1], terms[2], terms[3],
                               ell_increment_rhs(s.u, s.v, *profile, c.params)});
      }
    }
    rows.push_back(std::move(row));
  };

  auto flush = [&](const SBOState& last) {
    out.write_csv("series.csv", header, rows, "time series sampled every stride steps");
    std::vector<Series> series;
    for (std::size_t k = 1; k < header.size(); ++k) {
      Series s{"series_" + header[k], {}, {}};
      for (const auto& r : rows) {
        s.x.push_back(r[0]);
        s.y.push_back(r[k]);
      }
      series.push_back(std::move(s));
    }
    emit_plot_data(out, series, PlotKind::Linear);
    write_state(out, last, "final");
    results["samples"] = rows.size();
    results["final_time"] = last.t;
    if (conserve)
      results["max_relative_drift"] = {{"M", max_drift[0]}, {"L", max_drift[1]}, {"E", max_drift[2]}};
  };

  try {
    const SBOState last = evolve(init, c.params, c.stepper, run.duration, observe, run.stride);
    flush(last);
  } catch (const BlowUpError& e) {
    results["blow_up_time"] = e.time();
    flush(e.last_finite());
    throw;
  }
}

void run_decay(const ExperimentConfig& c, const RunOptions& opt, OutputSet& out, json& results) {
  const auto& d = *c.decay;
  const auto grid = c.spectral_grid();
  const auto& recipe = *c.data;
  const double s = recipe.kind == DataKind::RoughRandom ? recipe.target_s : 0.5;

  struct SeedRun {
    DecayResult decay;
    std::vector<double> iu_h1, iv_h12;
  };
  const auto runs = parallel_map<SeedRun>(d.seeds, opt.threads, [&](std::size_t i) {
    DataRecipe r = recipe;
    r.seed = recipe.seed + i;
    auto [u, v] = make_initial_pair(r, grid);
    SeedRun sr;
    for (double N : d.ladder) {
      const MultiplierProfile p(N, s, d.blend);
      sr.iu_h1.push_back(sobolev_norm(apply_I(p, u), 1.0));
      sr.iv_h12.push_back(sobolev_norm(apply_I(p, v), 0.5));
    }
    sr.decay = run_almost_conservation(SBOState{std::move(u), std::move(v), 0.0}, c.params, c.stepper, d.ladder,
                                       s, d.delta, d.blend);
    return sr;
  });

  std::vector<std::vector<double>> rows, slope_rows;
  std::vector<double> slopes;
  bool degenerate = false;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto& r = runs[i];
    const double seed = static_cast<double>(recipe.seed + i);
    for (std::size_t k = 0; k < r.decay.samples.size(); ++k) {
      const auto& smp = r.decay.samples[k];
      rows.push_back({seed, smp.N, smp.increment, smp.delta_energy, smp.delta_ell, r.iu_h1[k], r.iv_h12[k],
                      r.decay.slope});
    }
    slope_rows.push_back({seed, r.decay.slope, r.decay.degenerate ? 1.0 : 0.0});
    if (r.decay.degenerate)
      degenerate = true;
    else
      slopes.push_back(r.decay.slope);
  }
  out.write_csv("decay.csv", {"seed", "N", "increment", "delta_E", "delta_L", "Iu_H1", "Iv_H1/2", "slope"}, rows,
                "modified-functional increment over [0, delta] per seed and cutoff");
  out.write_csv("slopes.csv", {"seed", "slope", "degenerate"}, slope_rows, "fitted log-log slope per seed");

  Series med{"decay_median_increment", {}, {}};
  for (std::size_t k = 0; k < d.ladder.size(); ++k) {
    std::vector<double> inc;
    for (const auto& r : runs) inc.push_back(r.decay.samples[k].increment);
    med.x.push_back(d.ladder[k]);
    med.y.push_back(median(inc));
  }
  emit_plot_data(out, {med}, PlotKind::LogLog);

  results["slopes"] = slopes;
  results["median_slope"] = slopes.empty() ? json(nullptr) : json(median(slopes));
  results["degenerate"] = degenerate;
  if (degenerate) throw DegenerateFitError("increments at the numerical noise floor; slope fit is degenerate");
}

void run_scaling(const ExperimentConfig& c, OutputSet& out, json& results) {
  const auto& sc = *c.scaling;
  const SBOState init = initial_state(c);
  std::vector<std::vector<double>> rows;
  double worst = 0.0;
  for (const double lam : sc.lambdas) {
    // (u, v) solves the system iff its lambda-rescaling does, with time
    // stretched by lambda^2; stretching dt as well keeps the schemes identical.
    const SBOState solved = evolve(init, c.params, c.stepper, sc.time);
    const auto [su, sv] = scale_pair(solved.u, solved.v, lam);

    const auto [u0, v0] = scale_pair(init.u, init.v, lam);
    StepperConfig cfg = c.stepper;
    cfg.dt *= lam * lam;
    const SBOState other = evolve(SBOState{u0, v0, 0.0}, c.params, cfg, sc.time * lam * lam);

    const double nu = l2_norm(su);
    const double nv = l2_norm(sv);
    std::vector<cplx> du(su.values().begin(), su.values().end());
    std::vector<double> dv(sv.values().begin(), sv.values().end());
    for (std::size_t j = 0; j < du.size(); ++j) {
      du[j] -= other.u[j];
      dv[j] -= other.v[j];
    }
    const double ru = l2_norm(ComplexField(su.grid(), std::move(du))) / (nu > 0.0 ? nu : 1.0);
    const double rv = l2_norm(RealField(sv.grid(), std::move(dv))) / (nv > 0.0 ? nv : 1.0);
    const double mass_ratio = mass(init.u) > 0.0 ? l2_norm(u0) * lam / mass(init.u) : 1.0;
    worst = std::max({worst, ru, rv});
    rows.push_back({lam, ru, rv, mass_ratio});
  }
  out.write_csv("scaling.csv", {"lambda", "rel_l2_u", "rel_l2_v", "mass_ratio"}, rows,
                "solve-then-scale against scale-then-solve");
  results["max_relative_difference"] = worst;
}

void run_probe(const ExperimentConfig& c, const RunOptions& opt, OutputSet& out, json& results) {
  const auto& p = *c.probe;
  const std::size_t total = *std::max_element(p.batches.begin(), p.batches.end());
  json summary = json::object();
  for (const ProbeKind kind : p.kinds) {
    const auto ratios = parallel_map<double>(
        total, opt.threads, [&](std::size_t id) { return probe_sample(kind, p.settings, p.seed, id); });
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < ratios.size(); ++i) rows.push_back({static_cast<double>(i), ratios[i]});
    const auto name = std::string(to_string(kind));
    out.write_csv("probe_" + name + ".csv", {"sample_id", "ratio"}, rows, name + " ratio per sample");
    json maxima = json::object();
    for (const std::size_t b : p.batches) {
      const double m = *std::max_element(ratios.begin(), ratios.begin() + static_cast<std::ptrdiff_t>(b));
      maxima[std::to_string(b)] = m;
    }
    summary[name] = maxima;
  }
  json doc = {{"batch_max", summary},
              {"window",
               {{"length", p.settings.window.length},
                {"points", p.settings.window.points},
                {"hann", p.settings.window.hann}}}};
  out.write_json("probe_summary.json", doc, "batch maxima per probe kind");
  results["batch_max"] = summary;
}

void run_plan(const ExperimentConfig& c, OutputSet& out, json& results, json& constants) {
  auto p = *c.plan;
  if (p.calibrate_c0) {
    const std::uint64_t seed = c.data ? c.data->seed : 0;
    const auto cal = calibrate_c0(c.spectral_grid(), p.calibration_cutoff, p.s, c.params, p.calibration_samples,
                                  seed, p.u_norm, p.v_norm);
    p.constants.c0 = cal.c0;
    constants["c0_calibration"] = {{"c0", cal.c0},
                                   {"samples", cal.samples},
                                   {"seed", seed},
                                   {"cutoff", p.calibration_cutoff},
                                   {"worst_abs_E", cal.worst_energy},
                                   {"worst_abs_L", cal.worst_ell}};
  }
  p.constants.resonance = resonance_of(c.params.nu);
  constants["c0"] = p.constants.c0;
  constants["cbar"] = p.constants.cbar;
  constants["delta_constant"] = p.constants.delta_constant;
  constants["epsilon"] = p.constants.epsilon;

  std::vector<std::vector<double>> rows;
  std::vector<double> ts, ns;
  for (const double T : p.horizons) {
    const auto plan = continuation_plan(T, p.s, p.u_norm, p.v_norm, p.u_mass, p.constants);
    rows.push_back({T, plan.N, plan.lambda, plan.delta, static_cast<double>(plan.iterations), plan.reachable});
    if (T > 0.0) {
      ts.push_back(T);
      ns.push_back(plan.N);
    }
  }
  out.write_csv("plan.csv", {"T", "N", "lambda", "delta", "iterations", "reachable"}, rows,
                "continuation schedule per horizon");
  emit_plot_data(out, {Series{"plan_N_vs_T", ts, ns}}, PlotKind::LogLog);
  results["loglog_slope_N_vs_T"] = ts.size() >= 2 ? json(loglog_slope(ts, ns)) : json(nullptr);
  results["expected_slope"] = (p.s + 1.0) / (3.0 * p.s - 1.0);
}

void run_growth(const ExperimentConfig& c, OutputSet& out, json& results) {
  std::vector<std::vector<double>> rows;
  for (const double s : c.growth->s) {
    const auto [eu, ev] = growth_exponents(s);
    rows.push_back({s, eu, ev});
  }
  out.write_csv("growth.csv", {"s", "e_u", "e_v"}, rows, "polynomial growth exponents");
  results["rows"] = rows;
}

}  // namespace

int run_experiment(const ExperimentConfig& config, const RunOptions& options, std::ostream& log) {
  OutputSet out(options.out);
  json manifest;
  manifest["tool"] = "sbo";
  manifest["version"] = SBO_VERSION;
  manifest["versions"] = {{"fftw", std::string(fftw_version)}};
  manifest["config"] = to_json(config);
  json seeds = json::object();
  if (config.data) seeds["data"] = config.data->seed;
  if (config.probe) seeds["probe"] = config.probe->seed;
  manifest["seeds"] = seeds;
  json results = json::object();
  json constants = json::object();

  int code = kSuccess;
  std::string error;
  try {
    switch (config.experiment) {
      case Experiment::Simulate: run_time_series(config, out, results, false); break;
      case Experiment::Conserve: run_time_series(config, out, results, true); break;
      case Experiment::ImethodDecay: run_decay(config, options, out, results); break;
      case Experiment::ScalingCheck: run_scaling(config, out, results); break;
      case Experiment::EstimateProbe: run_probe(config, options, out, results); break;
      case Experiment::ContinuationPlan: run_plan(config, out, results, constants); break;
      case Experiment::GrowthBounds: run_growth(config, out, results); break;
    }
  } catch (const BlowUpError& e) {
    code = kBlowUp;
    error = e.what();
  } catch (const InfeasibleRegimeError& e) {
    code = kInfeasible;
    error = e.what();
  } catch (const DegenerateFitError& e) {
    code = kDegenerateFit;
    error = e.what();
  } catch (const std::invalid_argument& e) {
    code = kConfigError;
    error = e.what();
  } catch (const ConfigError& e) {
    code = kConfigError;
    error = e.what();
  } catch (const std::exception& e) {
    code = kFailure;
    error = e.what();
  }

  manifest["status"] = code == kSuccess ? "OK" : "FAILED";
  manifest["exit_code"] = code;
  if (!error.empty()) manifest["error"] = error;
  manifest["constants"] = constants;
  manifest["results"] = results;
  manifest["outputs"] = out.entries();
  {
    std::ofstream f(out.dir() / "manifest.json", std::ios::binary);
    f << manifest.dump(2) << "\n";
  }
  if (!error.empty()) log << "sbo " << to_string(config.experiment) << ": " << error << "\n";
  log << "sbo " << to_string(config.experiment) << ": " << manifest["status"].get<std::string>() << " -> "
      << (out.dir() / "manifest.json").string() << "\n";
  return code;
}

}  // namespace sbo::harness
