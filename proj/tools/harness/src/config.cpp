#include "sbo/harness/config.hpp"

#include <array>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <yaml-cpp/yaml.h>

#include <sbo/errors.hpp>

namespace sbo::harness {
namespace {

constexpr std::array<std::pair<Experiment, std::string_view>, 7> kExperiments{{
    {Experiment::Simulate, "simulate"},
    {Experiment::Conserve, "conserve"},
    {Experiment::ImethodDecay, "imethod-decay"},
    {Experiment::ScalingCheck, "scaling-check"},
    {Experiment::EstimateProbe, "estimate-probe"},
    {Experiment::ContinuationPlan, "continuation-plan"},
    {Experiment::GrowthBounds, "growth-bounds"},
}};

// Map node with a fixed key set; reading a key marks it as known.
class Block {
 public:
  Block(YAML::Node node, std::string path, std::set<std::string> allowed)
      : node_(std::move(node)), path_(std::move(path)), allowed_(std::move(allowed)) {
    if (!node_.IsMap()) throw ConfigError("'" + path_ + "' must be a mapping");
    for (const auto& kv : node_) {
      const auto key = kv.first.as<std::string>();
      if (!allowed_.count(key)) throw ConfigError("unknown key '" + qualified(key) + "'");
    }
  }

  bool has(const std::string& key) const { return static_cast<bool>(node_[key]); }

  template <class T>
  T get(const std::string& key, T fallback) const {
    if (!has(key)) return fallback;
    return as<T>(key);
  }

  template <class T>
  T require(const std::string& key) const {
    if (!has(key)) throw ConfigError("missing required key '" + qualified(key) + "'");
    return as<T>(key);
  }

  template <class T>
  std::vector<T> list(const std::string& key, std::vector<T> fallback) const {
    if (!has(key)) return fallback;
    const auto n = node_[key];
    if (!n.IsSequence() || n.size() == 0) throw ConfigError("'" + qualified(key) + "' must be a non-empty list");
    std::vector<T> out;
    for (const auto& item : n) {
      try {
        out.push_back(item.as<T>());
      } catch (const YAML::Exception&) {
        throw ConfigError("bad list entry in '" + qualified(key) + "'");
      }
    }
    return out;
  }

  Block child(const std::string& key, std::set<std::string> allowed) const {
    return Block(node_[key], qualified(key), std::move(allowed));
  }

  std::string qualified(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

 private:
  template <class T>
  T as(const std::string& key) const {
    try {
      return node_[key].as<T>();
    } catch (const YAML::Exception&) {
      throw ConfigError("bad value for '" + qualified(key) + "'");
    }
  }

  YAML::Node node_;
  std::string path_;
  std::set<std::string> allowed_;
};

template <class F>
auto wrap(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(what + ": " + e.what());
  }
}

GridBlock parse_grid(const Block& b) {
  return {b.require<double>("length"), b.require<std::int64_t>("points")};
}

DataRecipe parse_data(const Block& b) {
  DataRecipe r;
  r.kind = wrap("data.kind", [&] { return parse_data_kind(b.require<std::string>("kind")); });
  r.amplitude = b.get("amplitude", r.amplitude);
  r.width = b.get("width", r.width);
  r.modulation = b.get("modulation", r.modulation);
  r.v_amplitude = b.get("v_amplitude", r.v_amplitude);
  r.v_width = b.get("v_width", r.width);
  r.target_s = b.get("s", r.target_s);
  r.seed = b.get<std::uint64_t>("seed", r.seed);
  r.u_norm = b.get("u_norm", r.u_norm);
  r.v_norm = b.get("v_norm", r.v_norm);
  r.extra_decay = b.get("extra_decay", r.extra_decay);
  return r;
}

TimeWindow parse_window(const Block& b) {
  TimeWindow w;
  w.length = b.get("length", w.length);
  w.points = b.get<std::size_t>("points", w.points);
  w.hann = b.get("hann", w.hann);
  return w;
}

ProbeBlock parse_probe(const Block& b) {
  ProbeBlock p;
  for (const auto& k : b.list<std::string>("kinds", {"strichartz-schrodinger", "strichartz-bo", "bilinear",
                                                      "product", "burgers"}))
    p.kinds.push_back(wrap("probe.kinds", [&] { return parse_probe_kind(k); }));
  p.batches = b.list<std::size_t>("batches", p.batches);
  p.seed = b.get<std::uint64_t>("seed", p.seed);
  auto& st = p.settings;
  const double length = b.get("length", st.grid.length());
  const auto points = b.get<std::int64_t>("points", st.grid.points());
  st.grid = wrap("probe grid", [&] { return SpectralGrid(length, points); });
  if (b.has("window")) st.window = parse_window(b.child("window", {"length", "points", "hann"}));
  st.min_width = b.get("min_width", st.min_width);
  st.max_width = b.get("max_width", st.max_width);
  st.max_modulation = b.get("max_modulation", st.max_modulation);
  st.s = b.get("s", st.s);
  st.a = b.get("a", st.a);
  st.b = b.get("b", st.b);
  st.nu = b.get("nu", st.nu);
  st.p = b.get("p", st.p);
  return p;
}

PlanBlock parse_plan(const Block& b) {
  PlanBlock p;
  p.horizons = b.list<double>("horizons", p.horizons);
  p.s = b.require<double>("s");
  p.u_norm = b.get("u_norm", p.u_norm);
  p.v_norm = b.get("v_norm", p.v_norm);
  p.u_mass = b.get("u_mass", p.u_mass);
  auto& k = p.constants;
  k.c0 = b.get("c0", k.c0);
  k.cbar = b.get("cbar", k.cbar);
  k.delta_constant = b.get("delta_constant", k.delta_constant);
  k.epsilon = b.get("epsilon", k.epsilon);
  p.calibrate_c0 = b.get("calibrate_c0", p.calibrate_c0);
  p.calibration_cutoff = b.get("calibration_cutoff", p.calibration_cutoff);
  p.calibration_samples = b.get<std::size_t>("calibration_samples", p.calibration_samples);
  return p;
}

ExperimentConfig from_node(const YAML::Node& root, std::optional<Experiment> experiment) {
  if (!root || root.IsNull()) throw ConfigError("empty configuration");
  const Block top(root, "", {"experiment", "grid", "data", "params", "stepper", "run", "decay", "scaling", "probe",
                             "plan", "growth", "output"});
  ExperimentConfig c;
  if (top.has("experiment")) {
    c.experiment = parse_experiment(top.require<std::string>("experiment"));
    if (experiment && *experiment != c.experiment)
      throw ConfigError("config is for experiment '" + std::string(to_string(c.experiment)) + "', not '" +
                        std::string(to_string(*experiment)) + "'");
  } else if (experiment) {
    c.experiment = *experiment;
  } else {
    throw ConfigError("missing required key 'experiment'");
  }

  if (top.has("grid")) c.grid = parse_grid(top.child("grid", {"length", "points"}));
  if (top.has("data"))
    c.data = parse_data(top.child("data", {"kind", "amplitude", "width", "modulation", "v_amplitude", "v_width",
                                           "s", "seed", "u_norm", "v_norm", "extra_decay"}));
  if (top.has("params")) {
    const auto b = top.child("params", {"alpha", "beta", "nu"});
    c.params.alpha = b.get("alpha", c.params.alpha);
    c.params.beta = b.get("beta", c.params.beta);
    c.params.nu = b.get("nu", c.params.nu);
  }
  if (top.has("stepper")) {
    const auto b = top.child("stepper", {"dt", "scheme", "dealias"});
    c.stepper.dt = b.get("dt", c.stepper.dt);
    if (b.has("scheme"))
      c.stepper.scheme = wrap("stepper.scheme", [&] { return parse_scheme(b.require<std::string>("scheme")); });
    c.stepper.dealias = b.get("dealias", c.stepper.dealias);
  }
  if (top.has("run")) {
    const auto b = top.child("run", {"duration", "stride", "cutoff", "s", "blend"});
    RunBlock r;
    r.duration = b.get("duration", r.duration);
    r.stride = b.get<std::size_t>("stride", r.stride);
    if (b.has("cutoff")) r.cutoff = b.require<double>("cutoff");
    r.s = b.get("s", r.s);
    if (b.has("blend")) r.blend = wrap("run.blend", [&] { return parse_blend(b.require<std::string>("blend")); });
    c.run = r;
  }
  if (top.has("decay")) {
    const auto b = top.child("decay", {"ladder", "delta", "blend", "seeds"});
    DecayBlock d;
    d.ladder = b.list<double>("ladder", d.ladder);
    d.delta = b.get("delta", d.delta);
    if (b.has("blend")) d.blend = wrap("decay.blend", [&] { return parse_blend(b.require<std::string>("blend")); });
    d.seeds = b.get<std::size_t>("seeds", d.seeds);
    c.decay = d;
  }
  if (top.has("scaling")) {
    const auto b = top.child("scaling", {"lambdas", "time"});
    ScalingBlock s;
    s.lambdas = b.list<double>("lambdas", s.lambdas);
    s.time = b.get("time", s.time);
    c.scaling = s;
  }
  if (top.has("probe"))
    c.probe = parse_probe(top.child("probe", {"kinds", "batches", "seed", "length", "points", "window", "min_width",
                                              "max_width", "max_modulation", "s", "a", "b", "nu", "p"}));
  if (top.has("plan"))
    c.plan = parse_plan(top.child("plan", {"horizons", "s", "u_norm", "v_norm", "u_mass", "c0", "cbar",
                                           "delta_constant", "epsilon", "calibrate_c0", "calibration_cutoff",
                                           "calibration_samples"}));
  if (top.has("growth")) {
    const auto b = top.child("growth", {"s"});
    c.growth = GrowthBlock{b.list<double>("s", {0.5})};
  }
  if (top.has("output")) {
    const auto b = top.child("output", {"dir"});
    c.output = std::filesystem::path(b.require<std::string>("dir"));
  }
  validate(c);
  return c;
}

}  // namespace

Experiment parse_experiment(std::string_view name) {
  for (const auto& [e, n] : kExperiments)
    if (n == name) return e;
  throw ConfigError("unknown experiment '" + std::string(name) + "'");
}

std::string_view to_string(Experiment e) {
  for (const auto& [k, n] : kExperiments)
    if (k == e) return n;
  return "unknown";
}

SpectralGrid ExperimentConfig::spectral_grid() const {
  if (!grid) throw ConfigError("missing required block 'grid'");
  return wrap("grid", [&] { return SpectralGrid(grid->length, grid->points); });
}

void validate(const ExperimentConfig& c) {
  const auto name = std::string(to_string(c.experiment));
  auto need = [&](bool present, const char* block) {
    if (!present) throw ConfigError("experiment '" + name + "' requires block '" + block + "'");
  };
  auto global = [&] {
    if (!c.params.in_global_regime())
      throw ConfigError("experiment '" + name +
                        "' needs the standing assumption nu > 0 and alpha/beta < 0 (got alpha = " +
                        std::to_string(c.params.alpha) + ", beta = " + std::to_string(c.params.beta) +
                        ", nu = " + std::to_string(c.params.nu) + ")");
  };
  if (!(c.stepper.dt > 0.0)) throw ConfigError("stepper.dt must be positive");

  switch (c.experiment) {
    case Experiment::Simulate:
    case Experiment::Conserve:
      need(c.grid.has_value(), "grid");
      need(c.data.has_value(), "data");
      need(c.run.has_value(), "run");
      if (!(c.run->duration >= 0.0)) throw ConfigError("run.duration must be >= 0");
      if (c.run->stride == 0) throw ConfigError("run.stride must be >= 1");
      if (c.experiment == Experiment::Conserve && c.params.beta == 0.0)
        throw ConfigError("conserve needs beta != 0 (the functionals divide by beta)");
      break;
    case Experiment::ImethodDecay:
      need(c.grid.has_value(), "grid");
      need(c.data.has_value(), "data");
      need(c.decay.has_value(), "decay");
      global();
      if (!(c.decay->delta > 0.0)) throw ConfigError("decay.delta must be positive");
      if (c.decay->seeds == 0) throw ConfigError("decay.seeds must be >= 1");
      if (c.decay->ladder.size() < 2) throw ConfigError("decay.ladder needs at least two cutoffs");
      break;
    case Experiment::ScalingCheck:
      need(c.grid.has_value(), "grid");
      need(c.data.has_value(), "data");
      need(c.scaling.has_value(), "scaling");
      break;
    case Experiment::EstimateProbe:
      need(c.probe.has_value(), "probe");
      break;
    case Experiment::ContinuationPlan:
      need(c.plan.has_value(), "plan");
      global();
      if (c.plan->calibrate_c0) need(c.grid.has_value(), "grid");
      break;
    case Experiment::GrowthBounds:
      need(c.growth.has_value(), "growth");
      break;
  }
  if (c.grid) (void)c.spectral_grid();
  if (c.data) wrap("data", [&] { c.data->validate(); return 0; });
  if (c.probe) wrap("probe", [&] { c.probe->settings.window.validate(); return 0; });
}

ExperimentConfig parse_config_text(const std::string& text, std::optional<Experiment> experiment) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("YAML syntax: ") + e.what());
  }
  return from_node(root, experiment);
}

ExperimentConfig parse_config(const std::filesystem::path& path, std::optional<Experiment> experiment) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str(), experiment);
}

}  // namespace sbo::harness
