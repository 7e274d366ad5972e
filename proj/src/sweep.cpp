#include "satcoex/sweep.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "satcoex/lms_channel.hpp"

namespace satcoex {
namespace {

enum class Side { none, near, far, across };

Side side_of(const SeparationResult& r) {
  if (!r.binding_alpha_deg) return Side::none;
  if (*r.binding_alpha_deg < 90.0) return Side::near;
  if (*r.binding_alpha_deg > 90.0) return Side::far;
  return Side::across;
}

std::string describe(double alpha_deg, double value, const std::string& what) {
  std::ostringstream msg;
  msg << "alpha " << alpha_deg << " deg, value " << value << ": " << what;
  return msg.str();
}

}  // namespace

void SweepSpec::validate() const {
  if (!(min < max)) throw std::invalid_argument("sweep range needs min < max");
  if (!(step > 0.0)) throw std::invalid_argument("sweep step must be positive");
  if (alphas_deg.empty()) throw std::invalid_argument("sweep needs at least one alpha");
  if (channel.kind == ChannelMode::Kind::monte_carlo && channel.runs < 2) {
    throw std::invalid_argument("Monte Carlo mode needs at least two runs");
  }
}

std::vector<double> SweepSpec::values() const {
  std::vector<double> out;
  const double eps = 1e-9 * step;
  for (long i = 0;; ++i) {
    const double v = min + static_cast<double>(i) * step;
    if (v > max + eps) break;
    out.push_back(v);
  }
  if (out.empty() || max - out.back() > eps) out.push_back(max);
  return out;
}

PointEvaluation evaluate_point(const ScenarioConfig& scenario, double slant_km,
                               double separation_km, double alpha_deg,
                               double channel_gain_db) {
  PointEvaluation p;
  p.geometry = solve_geometry(scenario.satellite_at(slant_km),
                              scenario.placement(separation_km, alpha_deg), scenario.earth);
  p.validity = check_itu_validity(p.geometry, scenario.carrier_hz,
                                  scenario.receiver.prb_bandwidth_hz);
  const auto loss = total_path_loss(p.geometry, scenario.propagation());
  p.budget = evaluate_link_budget(p.geometry, loss, channel_gain_db, scenario.radio,
                                  scenario.aperture_pattern(), scenario.receiver);
  return p;
}

double worst_case_inr_db(const ScenarioConfig& scenario, double slant_km,
                         double separation_km, double alpha_deg) {
  const auto geometry = solve_geometry(scenario.satellite_at(slant_km),
                                       scenario.placement(separation_km, alpha_deg),
                                       scenario.earth);
  const auto loss = total_path_loss(geometry, scenario.propagation());
  return evaluate_link_budget(geometry, loss, scenario.worst_case_channel_gain_db,
                              scenario.radio, scenario.aperture_pattern(), scenario.receiver)
      .inr_db;
}

SweepError::SweepError(double alpha_deg, double value, const std::string& what)
    : std::runtime_error(describe(alpha_deg, value, what)),
      alpha_deg_(alpha_deg),
      value_(value) {}

std::uint64_t row_seed(std::uint64_t master, double alpha_deg, double value) {
  return mix_seed(mix_seed(master, std::bit_cast<std::uint64_t>(alpha_deg)),
                  std::bit_cast<std::uint64_t>(value));
}

double monte_carlo_channel_gain_db(const ScenarioConfig& scenario,
                                   const LmsEnvironmentTable& table,
                                   double elevation_deg, std::uint64_t seed, int runs) {
  const auto& ch = scenario.channel;
  const int table_elevation = table.binned_elevation(ch.environment, elevation_deg);
  const LmsStatePair& pair = table.lookup(ch.environment, table_elevation, ch.band);

  DopplerConfig doppler;
  doppler.satellite_altitude_km = scenario.satellite.altitude_km;
  doppler.elevation_deg = table_elevation;
  doppler.carrier_hz = scenario.carrier_hz;
  doppler.ue_speed_mps = ch.ue_speed_mps;
  doppler.ue_azimuth_deg = ch.ue_azimuth_deg;
  doppler.earth_radius_km = scenario.earth.radius_km;
  doppler.satellite_shift_compensated = ch.doppler_compensated;

  ChannelRunOptions run_opts;
  run_opts.duration = ch.run_duration;
  run_opts.duration_unit = table.duration_unit();
  run_opts.transition_s = ch.transition_s;

  double acc = 0.0;
  for (int r = 0; r < runs; ++r) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(r)));
    acc += series_gain_db(simulate_channel(pair.good, pair.bad, doppler, run_opts, rng));
  }
  return acc / static_cast<double>(runs);
}

SweepResult run_sweep(const SweepSpec& spec, const ScenarioConfig& scenario) {
  spec.validate();
  scenario.validate();

  std::optional<LmsEnvironmentTable> table;
  if (spec.channel.kind == ChannelMode::Kind::monte_carlo) {
    table = load_channel_table(scenario.channel);
  }

  SweepResult result;
  result.variable = spec.variable;
  const auto values = spec.values();
  result.rows.reserve(values.size() * spec.alphas_deg.size());

  for (double alpha : spec.alphas_deg) {
    for (double value : values) {
      const bool slant_var = spec.variable == SweepVariable::slant_range;
      const double slant = slant_var ? value : spec.fixed;
      const double separation = slant_var ? spec.fixed : value;
      try {
        double gain = scenario.worst_case_channel_gain_db;
        if (table) {
          const auto geometry = solve_geometry(scenario.satellite_at(slant),
                                               scenario.placement(separation, alpha),
                                               scenario.earth);
          gain = monte_carlo_channel_gain_db(scenario, *table, geometry.elevation_deg,
                                             row_seed(spec.channel.seed, alpha, value),
                                             spec.channel.runs);
        }
        result.rows.push_back({value, alpha, evaluate_point(scenario, slant, separation,
                                                            alpha, gain)});
      } catch (const std::exception& e) {
        throw SweepError(alpha, value, e.what());
      }
    }
  }
  return result;
}

std::vector<double> default_probe_alphas() {
  std::vector<double> out;
  for (int a = 0; a <= 180; a += 5) out.push_back(a);
  return out;
}

std::optional<double> zero_db_separation_for_alpha(double slant_km, double alpha_deg,
                                                   double validity_bound_km,
                                                   const ScenarioConfig& scenario,
                                                   const SolverOptions& options) {
  auto violates = [&](double s) {
    return worst_case_inr_db(scenario, slant_km, s, alpha_deg) > 0.0;
  };

  // Coarse grid 0, step, 2*step, ... with the bound itself as last point.
  std::vector<double> grid;
  for (long j = 0;; ++j) {
    const double s = static_cast<double>(j) * options.coarse_step_km;
    if (s >= validity_bound_km) break;
    grid.push_back(s);
  }
  grid.push_back(validity_bound_km);

  std::optional<std::size_t> last_bad;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (violates(grid[j])) last_bad = j;
  }
  if (!last_bad) return 0.0;
  if (*last_bad + 1 == grid.size()) return std::nullopt;

  double bad = grid[*last_bad];
  double good = grid[*last_bad + 1];
  while (good - bad > options.tolerance_km) {
    const double mid = 0.5 * (bad + good);
    if (violates(mid)) {
      bad = mid;
    } else {
      good = mid;
    }
  }
  return good;
}

SeparationResult zero_db_separation(double slant_km, const ScenarioConfig& scenario,
                                    const SolverOptions& options) {
  if (options.probe_alphas_deg.empty()) {
    throw std::invalid_argument("probe set of alphas is empty");
  }
  if (!(options.coarse_step_km > 0.0) || !(options.tolerance_km > 0.0)) {
    throw std::invalid_argument("solver step and tolerance must be positive");
  }
  if (!(slant_km >= scenario.satellite.altitude_km - 1e-9 &&
        slant_km <= scenario.max_operating_slant_km + 1e-9)) {
    std::ostringstream msg;
    msg << "slant range " << slant_km << " km outside the operating range ["
        << scenario.satellite.altitude_km << ", " << scenario.max_operating_slant_km << "] km";
    throw std::domain_error(msg.str());
  }

  SeparationResult result;
  result.validity_bound_km =
      max_separation_for_min_elevation(scenario.satellite_at(slant_km),
                                       scenario.min_elevation_deg, scenario.cell_radius_km,
                                       scenario.earth);

  constexpr double kTieKm = 1e-9;
  for (double alpha : options.probe_alphas_deg) {
    const auto s = zero_db_separation_for_alpha(slant_km, alpha, result.validity_bound_km,
                                                scenario, options);
    if (!s) {
      // Unresolvable dominates; keep the first direction that is.
      if (result.resolved) {
        result.resolved = false;
        result.separation_km = result.validity_bound_km;
        result.binding_alpha_deg = alpha;
      }
      continue;
    }
    if (!result.resolved || *s <= 0.0) continue;
    const bool larger = *s > result.separation_km + kTieKm;
    const bool tie_wider_alpha = std::abs(*s - result.separation_km) <= kTieKm &&
                                 alpha > result.binding_alpha_deg.value_or(-1.0);
    if (larger || tie_wider_alpha) {
      result.separation_km = std::max(result.separation_km, *s);
      result.binding_alpha_deg = alpha;
    }
  }
  return result;
}

std::optional<double> dominant_alpha_crossover(const ScenarioConfig& scenario,
                                               const SolverOptions& options) {
  constexpr double kScanStepKm = 10.0;
  constexpr double kBisectKm = 1.0;
  const double lo_slant = scenario.satellite.altitude_km;
  const double hi_slant = scenario.max_operating_slant_km;

  auto side_at = [&](double slant) {
    return side_of(zero_db_separation(slant, scenario, options));
  };

  std::vector<double> grid;
  for (long j = 0;; ++j) {
    const double s = lo_slant + static_cast<double>(j) * kScanStepKm;
    if (s >= hi_slant) break;
    grid.push_back(s);
  }
  grid.push_back(hi_slant);

  Side prev = side_at(grid.front());
  for (std::size_t j = 1; j < grid.size(); ++j) {
    const Side cur = side_at(grid[j]);
    if (prev == Side::far && cur == Side::near) {
      double far = grid[j - 1];
      double near = grid[j];
      while (near - far > kBisectKm) {
        const double mid = 0.5 * (far + near);
        if (side_at(mid) == Side::far) {
          far = mid;
        } else {
          near = mid;
        }
      }
      return 0.5 * (far + near);
    }
    prev = cur;
  }
  return std::nullopt;
}

}  // namespace satcoex
