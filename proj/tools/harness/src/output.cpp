#include "sbo/harness/output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace sbo::harness {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

OutputSet::OutputSet(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

void OutputSet::record(const std::string& name, const std::string& kind, const std::string& description) {
  entries_.push_back({{"path", name}, {"kind", kind}, {"description", description}});
}

void OutputSet::write_text(const std::string& name, const std::string& text, const std::string& kind,
                           const std::string& description) {
  std::ofstream f(dir_ / name, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + (dir_ / name).string());
  f << text;
  if (!f) throw std::runtime_error("write failed for " + (dir_ / name).string());
  record(name, kind, description);
}

void OutputSet::write_csv(const std::string& name, const std::vector<std::string>& header,
                          const std::vector<std::vector<double>>& rows, const std::string& description) {
  std::string text;
  for (std::size_t i = 0; i < header.size(); ++i) text += (i ? "," : "") + header[i];
  text += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) text += ',';
      text += format_double(row[i]);
    }
    text += '\n';
  }
  write_text(name, text, "csv", description);
}

void OutputSet::write_json(const std::string& name, const nlohmann::json& j, const std::string& description) {
  write_text(name, j.dump(2) + "\n", "json", description);
}

void emit_plot_data(OutputSet& out, const std::vector<Series>& series, PlotKind kind) {
  for (const auto& s : series) {
    std::string text = kind == PlotKind::LogLog ? "# log10 x, log10 y\n" : "# x, y\n";
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      double x = s.x[i];
      double y = s.y[i];
      if (kind == PlotKind::LogLog) {
        if (!(x > 0.0 && y > 0.0)) continue;
        x = std::log10(x);
        y = std::log10(y);
      }
      text += format_double(x) + " " + format_double(y) + "\n";
    }
    out.write_text(s.name + ".dat", text, kind == PlotKind::LogLog ? "plot-loglog" : "plot-linear",
                   "two-column plot data for " + s.name);
  }
}

nlohmann::json to_json(const ExperimentConfig& c) {
  using nlohmann::json;
  json j;
  j["experiment"] = std::string(to_string(c.experiment));
  if (c.grid) j["grid"] = {{"length", c.grid->length}, {"points", c.grid->points}};
  if (c.data) {
    const auto& d = *c.data;
    j["data"] = {{"kind", std::string(to_string(d.kind))},
                 {"amplitude", d.amplitude},
                 {"width", d.width},
                 {"modulation", d.modulation},
                 {"v_amplitude", d.v_amplitude},
                 {"v_width", d.v_width},
                 {"s", d.target_s},
                 {"seed", d.seed},
                 {"u_norm", d.u_norm},
                 {"v_norm", d.v_norm},
                 {"extra_decay", d.extra_decay}};
  }
  j["params"] = {{"alpha", c.params.alpha}, {"beta", c.params.beta}, {"nu", c.params.nu}};
  j["stepper"] = {{"dt", c.stepper.dt},
                  {"scheme", std::string(to_string(c.stepper.scheme))},
                  {"dealias", c.stepper.dealias}};
  if (c.run) {
    j["run"] = {{"duration", c.run->duration}, {"stride", c.run->stride}};
    if (c.run->cutoff) {
      j["run"]["cutoff"] = *c.run->cutoff;
      j["run"]["s"] = c.run->s;
      j["run"]["blend"] = std::string(to_string(c.run->blend));
    }
  }
  if (c.decay)
    j["decay"] = {{"ladder", c.decay->ladder},
                  {"delta", c.decay->delta},
                  {"blend", std::string(to_string(c.decay->blend))},
                  {"seeds", c.decay->seeds}};
  if (c.scaling) j["scaling"] = {{"lambdas", c.scaling->lambdas}, {"time", c.scaling->time}};
  if (c.probe) {
    const auto& p = *c.probe;
    const auto& st = p.settings;
    json kinds = json::array();
    for (auto k : p.kinds) kinds.push_back(std::string(to_string(k)));
    j["probe"] = {{"kinds", kinds},
                  {"batches", p.batches},
                  {"seed", p.seed},
                  {"length", st.grid.length()},
                  {"points", st.grid.points()},
                  {"window", {{"length", st.window.length}, {"points", st.window.points}, {"hann", st.window.hann}}},
                  {"min_width", st.min_width},
                  {"max_width", st.max_width},
                  {"max_modulation", st.max_modulation},
                  {"s", st.s},
                  {"a", st.a},
                  {"b", st.b},
                  {"nu", st.nu},
                  {"p", st.p}};
  }
  if (c.plan) {
    const auto& p = *c.plan;
    j["plan"] = {{"horizons", p.horizons},
                 {"s", p.s},
                 {"u_norm", p.u_norm},
                 {"v_norm", p.v_norm},
                 {"u_mass", p.u_mass},
                 {"c0", p.constants.c0},
                 {"cbar", p.constants.cbar},
                 {"delta_constant", p.constants.delta_constant},
                 {"epsilon", p.constants.epsilon},
                 {"calibrate_c0", p.calibrate_c0},
                 {"calibration_cutoff", p.calibration_cutoff},
                 {"calibration_samples", p.calibration_samples}};
  }
  if (c.growth) j["growth"] = {{"s", c.growth->s}};
  return j;
}

}  // namespace sbo::harness
