#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "sbo/harness/config.hpp"

namespace sbo::harness {

/// Shortest text that reads back to the same double (%.17g).
std::string format_double(double x);

enum class PlotKind { LogLog, Linear };

struct Series {
  std::string name;
  std::vector<double> x, y;
};

/// Files written into one output directory. Every write is recorded so the
/// manifest can list all of them.
class OutputSet {
 public:
  explicit OutputSet(std::filesystem::path dir);

  const std::filesystem::path& dir() const noexcept { return dir_; }

  void write_csv(const std::string& name, const std::vector<std::string>& header,
                 const std::vector<std::vector<double>>& rows, const std::string& description);
  void write_text(const std::string& name, const std::string& text, const std::string& kind,
                  const std::string& description);
  void write_json(const std::string& name, const nlohmann::json& j, const std::string& description);

  const nlohmann::json& entries() const noexcept { return entries_; }

 private:
  void record(const std::string& name, const std::string& kind, const std::string& description);

  std::filesystem::path dir_;
  nlohmann::json entries_ = nlohmann::json::array();
};

/// One two-column file per series: (log10 x, log10 y) for LogLog, skipping
/// non-positive entries, or (x, y) for Linear.
void emit_plot_data(OutputSet& out, const std::vector<Series>& series, PlotKind kind);

nlohmann::json to_json(const ExperimentConfig& config);

}  // namespace sbo::harness
