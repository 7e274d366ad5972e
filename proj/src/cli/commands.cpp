#include "satcoex/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "satcoex/cli/csv.hpp"
#include "satcoex/cli/scenario_file.hpp"
#include "satcoex/cli/svg_plot.hpp"
#include "satcoex/constants.hpp"
#include "satcoex/lms_channel.hpp"

namespace satcoex::cli {
namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Options shared by every subcommand, kept as raw text so they go through the
// same validation as the config file.
struct CommonArgs {
  std::string config;
  std::string out;
  bool svg = false;
  std::map<std::string, std::string> overrides;
};

void add_override(CLI::App* cmd, CommonArgs& args, const std::string& flag,
                  const std::string& key, const std::string& help) {
  cmd->add_option_function<std::string>(
      flag, [&args, key](const std::string& v) { args.overrides[key] = v; }, help);
}

ScenarioFile resolve_scenario(const CommonArgs& args, std::ostream& err) {
  ScenarioFile file = args.config.empty() ? ScenarioFile{} : load_scenario(args.config);
  for (const auto& [key, value] : args.overrides) {
    try {
      apply_setting(file, key, value);
    } catch (const std::invalid_argument& e) {
      throw InputError("option for " + key + ": " + e.what());
    }
  }
  file.scenario.validate();
  err << format_effective_config(file);
  return file;
}

// Runs `write` against --out when given, otherwise against `fallback`.
void emit(const std::string& path, std::ostream& fallback,
          const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write output file " + path);
  write(file);
  if (!file) throw InputError("failed writing output file " + path);
}

std::vector<double> range_values(double lo, double hi, double step) {
  SweepSpec tmp;
  tmp.min = lo;
  tmp.max = hi;
  tmp.step = step;
  tmp.validate();
  return tmp.values();
}

int cmd_geometry(const ScenarioFile& f, std::ostream& out) {
  const auto& sc = f.scenario;
  const auto sol = solve_geometry(sc.satellite, sc.placement(f.separation_km, f.alpha_deg),
                                  sc.earth);
  const auto report = check_itu_validity(sol, sc.carrier_hz, sc.receiver.prb_bandwidth_hz);
  out << "slant_range_km = " << format_value(sc.satellite.slant_range_km) << '\n'
      << "separation_km = " << format_value(f.separation_km) << '\n'
      << "alpha_deg = " << format_value(f.alpha_deg) << '\n'
      << "gamma_b_deg = " << format_value(rad_to_deg(sol.gamma_b_rad)) << '\n'
      << "gamma_bu_deg = " << format_value(rad_to_deg(sol.gamma_bu_rad)) << '\n'
      << "gamma_u_deg = " << format_value(rad_to_deg(sol.gamma_u_rad)) << '\n'
      << "d_u_km = " << format_value(sol.d_u_km) << '\n'
      << "elevation_deg = " << format_value(sol.elevation_deg) << '\n'
      << "theta_deg = " << format_value(sol.theta_deg) << '\n'
      << "itu_valid = " << (report.valid ? "true" : "false") << '\n';
  out << "violated_conditions = ";
  for (std::size_t i = 0; i < report.violated_conditions.size(); ++i) {
    out << (i ? "," : "") << to_string(report.violated_conditions[i]);
  }
  out << '\n';
  return report.valid ? kExitOk : kExitItuWarning;
}

void write_sweep_svgs(const std::string& out_path, const SweepResult& result) {
  if (out_path.empty()) throw InputError("--svg needs --out to name the figures");
  const bool slant = result.variable == SweepVariable::slant_range;
  const std::string x_label = slant ? "Slant range (km)" : "Separation distance (km)";

  struct Metric {
    const char* name;
    const char* title;
    double (*get)(const SweepRow&);
  };
  const Metric metrics[] = {
      {"eirp", "TX interference EIRP (dBW)", [](const SweepRow& r) { return r.point.budget.eirp_dbw; }},
      {"path_loss", "Path loss (dB)", [](const SweepRow& r) { return r.point.budget.path_loss.total_db; }},
      {"rx_power", "RX power per PRB (dBm)", [](const SweepRow& r) { return r.point.budget.rx_power_dbm; }},
      {"inr", "RX INR (dB)", [](const SweepRow& r) { return r.point.budget.inr_db; }},
      {"elevation", "Elevation angle (deg)", [](const SweepRow& r) { return r.point.geometry.elevation_deg; }},
      {"theta", "Misalignment angle (deg)", [](const SweepRow& r) { return r.point.geometry.theta_deg; }},
  };

  const std::filesystem::path base(out_path);
  for (const auto& m : metrics) {
    Plot plot{m.title, x_label, m.title, {}};
    for (const auto& row : result.rows) {
      const std::string label = "alpha = " + format_value(row.alpha_deg) + " deg";
      if (plot.series.empty() || plot.series.back().label != label) {
        plot.series.push_back({label, {}, {}});
      }
      plot.series.back().x.push_back(row.value);
      plot.series.back().y.push_back(m.get(row));
    }
    auto path = base;
    path.replace_filename(base.stem().string() + "_" + m.name + ".svg");
    emit(path.string(), std::cerr, [&](std::ostream& os) { write_svg(os, plot); });
  }
}

int cmd_sweep(const ScenarioFile& f, SweepVariable variable, const CommonArgs& args,
              std::ostream& out) {
  SweepSpec spec;
  spec.variable = variable;
  if (variable == SweepVariable::slant_range) {
    spec.min = f.sweep_slant_min_km;
    spec.max = f.sweep_slant_max_km;
    spec.step = f.sweep_slant_step_km;
    spec.fixed = f.separation_km;
  } else {
    spec.min = f.sweep_separation_min_km;
    spec.max = f.sweep_separation_max_km;
    spec.step = f.sweep_separation_step_km;
    spec.fixed = f.scenario.satellite.slant_range_km;
  }
  spec.alphas_deg = f.sweep_alphas_deg;
  spec.channel = {f.channel_mode, f.seed, f.runs};

  const auto result = run_sweep(spec, f.scenario);
  emit(args.out, out, [&](std::ostream& os) { write_sweep_csv(os, result); });
  if (args.svg) write_sweep_svgs(args.out, result);
  const bool all_valid = std::all_of(result.rows.begin(), result.rows.end(),
                                     [](const SweepRow& r) { return r.point.validity.valid; });
  return all_valid ? kExitOk : kExitItuWarning;
}

int cmd_min_separation(const ScenarioFile& f, const CommonArgs& args,
                       const std::optional<double>& single_slant, bool crossover,
                       std::ostream& out, std::ostream& err) {
  const std::vector<double> slants =
      single_slant ? std::vector<double>{*single_slant}
                   : range_values(f.minsep_slant_min_km, f.minsep_slant_max_km,
                                  f.minsep_slant_step_km);
  std::vector<MinSeparationRow> rows;
  for (double s : slants) rows.push_back({s, zero_db_separation(s, f.scenario, f.solver)});
  emit(args.out, out, [&](std::ostream& os) { write_min_separation_csv(os, rows); });

  if (crossover) {
    std::ostream& report = args.out.empty() ? err : out;
    const auto x = dominant_alpha_crossover(f.scenario, f.solver);
    report << "crossover_slant_km = " << (x ? format_value(*x) : std::string("none")) << '\n';
  }
  return kExitOk;
}

int cmd_channel_stats(const ScenarioFile& f, const CommonArgs& args, std::ostream& out,
                      std::ostream& err) {
  const LmsEnvironmentTable table = load_channel_table(f.scenario.channel);
  std::ostream& report = args.out.empty() ? err : out;
  if (table.synthetic()) {
    report << "# note: synthetic parameter table, statistics are illustrative only\n";
  }

  // Fail on any unavailable combination before spending time on simulation.
  for (Environment env : f.stats_environments) {
    for (int elev : f.stats_elevations_deg) {
      table.lookup(env, elev, f.scenario.channel.band);
    }
  }

  const auto& ch = f.scenario.channel;
  std::vector<ChannelStatsRow> rows;
  for (Environment env : f.stats_environments) {
    for (int elev : f.stats_elevations_deg) {
      const LmsStatePair& pair = table.lookup(env, elev, ch.band);
      DopplerConfig doppler;
      doppler.satellite_altitude_km = f.scenario.satellite.altitude_km;
      doppler.elevation_deg = elev;
      doppler.carrier_hz = f.scenario.carrier_hz;
      doppler.ue_speed_mps = ch.ue_speed_mps;
      doppler.ue_azimuth_deg = ch.ue_azimuth_deg;
      doppler.earth_radius_km = f.scenario.earth.radius_km;
      doppler.satellite_shift_compensated = ch.doppler_compensated;

      ChannelRunOptions opts;
      opts.duration = ch.run_duration;
      opts.duration_unit = table.duration_unit();
      opts.transition_s = ch.transition_s;

      const std::uint64_t combo_seed =
          mix_seed(f.seed, static_cast<std::uint64_t>(env) * 1000u + static_cast<std::uint64_t>(elev));
      std::vector<double> gains;
      for (int r = 0; r < f.runs; ++r) {
        Rng rng(mix_seed(combo_seed, static_cast<std::uint64_t>(r)));
        gains.push_back(series_gain_db(simulate_channel(pair.good, pair.bad, doppler, opts, rng)));
      }
      const auto stats = summarize_gains_db(gains);
      rows.push_back({to_string(env), elev, stats, table.synthetic()});
      report << to_string(env) << " " << elev << " deg: mean " << format_value(stats.mean_db)
             << " dB, 95% CI [" << format_value(stats.ci_low_db) << ", "
             << format_value(stats.ci_high_db) << "] dB over " << stats.runs << " runs\n";
    }
  }
  emit(args.out, out, [&](std::ostream& os) { write_channel_stats_csv(os, rows); });
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"LEO downlink interference into terrestrial S-band UEs", "satcoex"};
  app.require_subcommand(1);

  CommonArgs common;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", common.config, "scenario file (key = value)");
    add_override(cmd, common, "--seed", "seed", "random seed");
    add_override(cmd, common, "--runs", "runs", "Monte Carlo runs");
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--out", common.out, "output CSV path (stdout when omitted)");
  };

  auto* geometry = app.add_subcommand("geometry", "solve one UE position");
  add_common(geometry);
  add_override(geometry, common, "--slant", "slant_range_km", "slant range to beam center (km)");
  add_override(geometry, common, "--separation", "separation_km", "separation from cell edge (km)");
  add_override(geometry, common, "--alpha", "alpha_deg", "azimuth at beam center (deg)");

  auto* sweep_slant = app.add_subcommand("sweep-slant", "link budget versus slant range");
  auto* sweep_sep = app.add_subcommand("sweep-separation", "link budget versus separation");
  for (auto* cmd : {sweep_slant, sweep_sep}) {
    add_common(cmd);
    add_output(cmd);
    cmd->add_flag("--svg", common.svg, "also write one SVG per metric next to --out");
    add_override(cmd, common, "--alphas", "sweep_alphas_deg", "comma-separated alphas (deg)");
    add_override(cmd, common, "--mode", "channel_mode", "worst_case or monte_carlo");
  }
  add_override(sweep_slant, common, "--separation", "separation_km", "fixed separation (km)");
  add_override(sweep_sep, common, "--slant", "slant_range_km", "fixed slant range (km)");

  auto* min_sep = app.add_subcommand("min-separation", "0 dB INR separation per slant range");
  add_common(min_sep);
  add_output(min_sep);
  std::optional<double> single_slant;
  bool crossover = false;
  min_sep->add_option("--slant", single_slant, "evaluate a single slant range (km)");
  min_sep->add_flag("--crossover", crossover, "also locate the binding-direction crossover");

  auto* stats = app.add_subcommand("channel-stats", "mean channel gain with 95% CI");
  add_common(stats);
  add_output(stats);
  add_override(stats, common, "--env", "stats_environments", "comma-separated environments");
  add_override(stats, common, "--elevation", "stats_elevations_deg", "comma-separated elevations");
  add_override(stats, common, "--table", "lms_table", "parameter table path");

  std::vector<std::string> argv_store{"satcoex"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    const ScenarioFile file = resolve_scenario(common, err);
    if (geometry->parsed()) return cmd_geometry(file, out);
    if (sweep_slant->parsed()) return cmd_sweep(file, SweepVariable::slant_range, common, out);
    if (sweep_sep->parsed()) {
      return cmd_sweep(file, SweepVariable::separation_distance, common, out);
    }
    if (min_sep->parsed()) {
      return cmd_min_separation(file, common, single_slant, crossover, out, err);
    }
    if (stats->parsed()) return cmd_channel_stats(file, common, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace satcoex::cli
