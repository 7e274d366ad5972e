#pragma once

// Plain-text scenario files: `key = value` lines, '#' comments. Units are part
// of each key name. Unknown and repeated keys are rejected; missing keys keep
// their defaults.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "satcoex/lms_table.hpp"
#include "satcoex/scenario.hpp"
#include "satcoex/sweep.hpp"

namespace satcoex::cli {

struct ScenarioFile {
  ScenarioConfig scenario;

  // Single-point queries; also the fixed value of the opposite sweep.
  double separation_km = 100.0;
  double alpha_deg = 0.0;

  double sweep_slant_min_km = 600.0;
  double sweep_slant_max_km = 1075.19;
  double sweep_slant_step_km = 5.0;
  double sweep_separation_min_km = 0.0;
  double sweep_separation_max_km = 550.0;
  double sweep_separation_step_km = 1.0;
  std::vector<double> sweep_alphas_deg{0.0, 45.0, 90.0, 135.0, 180.0};
  ChannelMode::Kind channel_mode = ChannelMode::Kind::worst_case;
  std::uint64_t seed = 1;
  int runs = 20;

  SolverOptions solver;
  double minsep_slant_min_km = 600.0;
  double minsep_slant_max_km = 1075.19;
  double minsep_slant_step_km = 25.0;

  std::vector<Environment> stats_environments{Environment::urban, Environment::suburban,
                                              Environment::rural_wooded};
  std::vector<int> stats_elevations_deg{20, 30, 45, 60, 70};
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& source, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

ScenarioFile parse_scenario(std::istream& in, const std::string& source_name);
ScenarioFile load_scenario(const std::filesystem::path& path);

// Every key in a fixed order with shortest round-trip number formatting; the
// text parses back to an identical ScenarioFile.
std::string format_effective_config(const ScenarioFile& file);

// Parses one value for `key` into `file`; shared by the file reader and
// command-line overrides. Throws std::invalid_argument on bad input.
void apply_setting(ScenarioFile& file, const std::string& key, const std::string& value);

std::vector<std::string> scenario_keys();

}  // namespace satcoex::cli
