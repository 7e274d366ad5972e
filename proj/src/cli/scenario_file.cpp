#include "satcoex/cli/scenario_file.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace satcoex::cli {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string fmt(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

double to_double(const std::string& s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
    throw std::invalid_argument("'" + s + "' is not a finite number");
  }
  return v;
}

long long to_integer(const std::string& s) {
  long long v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("'" + s + "' is not an integer");
  }
  return v;
}

bool to_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw std::invalid_argument("'" + s + "' is not true or false");
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    item = trim(item);
    if (item.empty()) throw std::invalid_argument("empty item in list '" + s + "'");
    out.push_back(item);
  }
  return out;
}

template <typename T, typename F>
std::string join(const std::vector<T>& items, F&& to_text) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ",";
    out += to_text(items[i]);
  }
  return out;
}

struct Field {
  std::string key;
  std::function<std::string(const ScenarioFile&)> get;
  std::function<void(ScenarioFile&, const std::string&)> set;
};

// Numeric field stored internally in `unit` times the file unit.
template <typename Member>
Field number(std::string key, Member member, double unit = 1.0) {
  return {std::move(key),
          [member, unit](const ScenarioFile& f) { return fmt(member(f) / unit); },
          [member, unit](ScenarioFile& f, const std::string& v) { member(f) = to_double(v) * unit; }};
}

template <typename Member>
Field flag(std::string key, Member member) {
  return {std::move(key),
          [member](const ScenarioFile& f) {
            return std::string(member(f) ? "true" : "false");
          },
          [member](ScenarioFile& f, const std::string& v) { member(f) = to_bool(v); }};
}

template <typename Member>
Field angle_list(std::string key, Member member) {
  return {std::move(key),
          [member](const ScenarioFile& f) {
            return join(member(f), [](double a) { return fmt(a); });
          },
          [member](ScenarioFile& f, const std::string& v) {
            std::vector<double> out;
            for (const auto& item : split_list(v)) out.push_back(to_double(item));
            if (out.empty()) throw std::invalid_argument("list must not be empty");
            member(f) = std::move(out);
          }};
}

#define MEMBER(expr) [](auto& f) -> auto& { return f.expr; }

const std::vector<Field>& fields() {
  static const std::vector<Field> all = [] {
    std::vector<Field> v;
    v.push_back(number("earth_radius_km", MEMBER(scenario.earth.radius_km)));
    v.push_back(number("altitude_km", MEMBER(scenario.satellite.altitude_km)));
    v.push_back(number("slant_range_km", MEMBER(scenario.satellite.slant_range_km)));
    v.push_back(number("max_operating_slant_km", MEMBER(scenario.max_operating_slant_km)));
    v.push_back(number("cell_radius_km", MEMBER(scenario.cell_radius_km)));
    v.push_back(number("separation_km", MEMBER(separation_km)));
    v.push_back(number("alpha_deg", MEMBER(alpha_deg)));
    v.push_back(number("carrier_ghz", MEMBER(scenario.carrier_hz), 1e9));
    v.push_back(number("aperture_diameter_m", MEMBER(scenario.aperture_diameter_m)));
    v.push_back(number("null_floor_db", MEMBER(scenario.null_floor_db)));
    v.push_back(number("peak_eirp_dbw", MEMBER(scenario.radio.peak_eirp_per_prb_dbw)));
    v.push_back(number("max_gain_dbi", MEMBER(scenario.radio.max_gain_dbi)));
    v.push_back(number("latitude_deg", MEMBER(scenario.latitude_deg)));
    v.push_back(flag("gaseous_enabled", MEMBER(scenario.gaseous_enabled)));
    v.push_back(number("gaseous_zenith_db", MEMBER(scenario.gaseous_zenith_db)));
    v.push_back(flag("shadow_clutter_enabled", MEMBER(scenario.shadow_clutter_enabled)));
    v.push_back(number("rx_antenna_gain_dbi", MEMBER(scenario.receiver.antenna_gain_dbi)));
    v.push_back(number("temperature_k", MEMBER(scenario.receiver.equivalent_temperature_k)));
    v.push_back(number("prb_bandwidth_khz", MEMBER(scenario.receiver.prb_bandwidth_hz), 1e3));
    v.push_back(number("channel_gain_db", MEMBER(scenario.worst_case_channel_gain_db)));
    v.push_back(number("min_elevation_deg", MEMBER(scenario.min_elevation_deg)));
    v.push_back({"lms_table",
                 [](const ScenarioFile& f) { return f.scenario.channel.table_path; },
                 [](ScenarioFile& f, const std::string& s) { f.scenario.channel.table_path = s; }});
    v.push_back({"environment",
                 [](const ScenarioFile& f) { return to_string(f.scenario.channel.environment); },
                 [](ScenarioFile& f, const std::string& s) {
                   const auto env = parse_environment(s);
                   if (!env) throw std::invalid_argument("unknown environment '" + s + "'");
                   f.scenario.channel.environment = *env;
                 }});
    v.push_back({"lms_band", [](const ScenarioFile& f) { return f.scenario.channel.band; },
                 [](ScenarioFile& f, const std::string& s) {
                   if (s.empty()) throw std::invalid_argument("band must not be empty");
                   f.scenario.channel.band = s;
                 }});
    v.push_back(number("ue_speed_mps", MEMBER(scenario.channel.ue_speed_mps)));
    v.push_back(number("ue_azimuth_deg", MEMBER(scenario.channel.ue_azimuth_deg)));
    v.push_back(number("channel_run_duration", MEMBER(scenario.channel.run_duration)));
    v.push_back(flag("doppler_compensated", MEMBER(scenario.channel.doppler_compensated)));
    v.push_back(number("transition_s", MEMBER(scenario.channel.transition_s)));
    v.push_back(number("sweep_slant_min_km", MEMBER(sweep_slant_min_km)));
    v.push_back(number("sweep_slant_max_km", MEMBER(sweep_slant_max_km)));
    v.push_back(number("sweep_slant_step_km", MEMBER(sweep_slant_step_km)));
    v.push_back(number("sweep_separation_min_km", MEMBER(sweep_separation_min_km)));
    v.push_back(number("sweep_separation_max_km", MEMBER(sweep_separation_max_km)));
    v.push_back(number("sweep_separation_step_km", MEMBER(sweep_separation_step_km)));
    v.push_back(angle_list("sweep_alphas_deg", MEMBER(sweep_alphas_deg)));
    v.push_back({"channel_mode",
                 [](const ScenarioFile& f) {
                   return std::string(f.channel_mode == ChannelMode::Kind::worst_case
                                          ? "worst_case"
                                          : "monte_carlo");
                 },
                 [](ScenarioFile& f, const std::string& s) {
                   if (s == "worst_case") {
                     f.channel_mode = ChannelMode::Kind::worst_case;
                   } else if (s == "monte_carlo") {
                     f.channel_mode = ChannelMode::Kind::monte_carlo;
                   } else {
                     throw std::invalid_argument("channel_mode must be worst_case or monte_carlo");
                   }
                 }});
    v.push_back({"seed", [](const ScenarioFile& f) { return std::to_string(f.seed); },
                 [](ScenarioFile& f, const std::string& s) {
                   const auto x = to_integer(s);
                   if (x < 0) throw std::invalid_argument("seed must be non-negative");
                   f.seed = static_cast<std::uint64_t>(x);
                 }});
    v.push_back({"runs", [](const ScenarioFile& f) { return std::to_string(f.runs); },
                 [](ScenarioFile& f, const std::string& s) {
                   const auto x = to_integer(s);
                   if (x < 2 || x > 1000000) throw std::invalid_argument("runs must lie in [2, 1e6]");
                   f.runs = static_cast<int>(x);
                 }});
    v.push_back(angle_list("solver_alphas_deg", MEMBER(solver.probe_alphas_deg)));
    v.push_back(number("solver_step_km", MEMBER(solver.coarse_step_km)));
    v.push_back(number("solver_tolerance_km", MEMBER(solver.tolerance_km)));
    v.push_back(number("minsep_slant_min_km", MEMBER(minsep_slant_min_km)));
    v.push_back(number("minsep_slant_max_km", MEMBER(minsep_slant_max_km)));
    v.push_back(number("minsep_slant_step_km", MEMBER(minsep_slant_step_km)));
    v.push_back({"stats_environments",
                 [](const ScenarioFile& f) {
                   return join(f.stats_environments, [](Environment e) { return to_string(e); });
                 },
                 [](ScenarioFile& f, const std::string& s) {
                   std::vector<Environment> out;
                   for (const auto& item : split_list(s)) {
                     const auto env = parse_environment(item);
                     if (!env) throw std::invalid_argument("unknown environment '" + item + "'");
                     out.push_back(*env);
                   }
                   if (out.empty()) throw std::invalid_argument("list must not be empty");
                   f.stats_environments = std::move(out);
                 }});
    v.push_back({"stats_elevations_deg",
                 [](const ScenarioFile& f) {
                   return join(f.stats_elevations_deg, [](int e) { return std::to_string(e); });
                 },
                 [](ScenarioFile& f, const std::string& s) {
                   std::vector<int> out;
                   for (const auto& item : split_list(s)) {
                     out.push_back(static_cast<int>(to_integer(item)));
                   }
                   if (out.empty()) throw std::invalid_argument("list must not be empty");
                   f.stats_elevations_deg = std::move(out);
                 }});
    return v;
  }();
  return all;
}

#undef MEMBER

}  // namespace

ConfigError::ConfigError(const std::string& source, std::size_t line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

void apply_setting(ScenarioFile& file, const std::string& key, const std::string& value) {
  for (const auto& f : fields()) {
    if (f.key == key) {
      f.set(file, value);
      return;
    }
  }
  throw std::invalid_argument("unknown key '" + key + "'");
}

std::vector<std::string> scenario_keys() {
  std::vector<std::string> out;
  for (const auto& f : fields()) out.push_back(f.key);
  return out;
}

ScenarioFile parse_scenario(std::istream& in, const std::string& source_name) {
  ScenarioFile file;
  std::set<std::string> seen;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(source_name, line_no, "expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) {
      throw ConfigError(source_name, line_no, "duplicate key '" + key + "'");
    }
    try {
      apply_setting(file, key, value);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(source_name, line_no, e.what());
    }
  }
  return file;
}

ScenarioFile load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string(), 0, "cannot open config file");
  return parse_scenario(in, path.string());
}

std::string format_effective_config(const ScenarioFile& file) {
  std::string out = "# effective config\n";
  for (const auto& f : fields()) {
    out += f.key + " = " + f.get(file) + "\n";
  }
  return out;
}

}  // namespace satcoex::cli
