#pragma once

// Link-budget sweeps over slant range or separation distance, and the search
// for the separation beyond which interference stays below the noise floor.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "satcoex/link_budget.hpp"
#include "satcoex/lms_table.hpp"
#include "satcoex/scenario.hpp"

namespace satcoex {

enum class SweepVariable { slant_range, separation_distance };

struct ChannelMode {
  enum class Kind { worst_case, monte_carlo };
  Kind kind = Kind::worst_case;
  std::uint64_t seed = 1;
  int runs = 20;
};

struct SweepSpec {
  SweepVariable variable = SweepVariable::slant_range;
  double min = 600.0;
  double max = 1075.19;
  double step = 5.0;
  double fixed = 100.0;  // separation (km) or slant range (km)
  std::vector<double> alphas_deg{0.0, 45.0, 90.0, 135.0, 180.0};
  ChannelMode channel;

  void validate() const;
  // min, min+step, ... up to max; max itself is appended when the grid
  // misses it by more than 1e-9 step.
  std::vector<double> values() const;
};

// Geometry, validity and link budget of one (slant, separation, alpha) point.
struct PointEvaluation {
  GeometrySolution geometry;
  ItuValidityReport validity;
  LinkBudgetBreakdown budget;
};

PointEvaluation evaluate_point(const ScenarioConfig& scenario, double slant_km,
                               double separation_km, double alpha_deg,
                               double channel_gain_db);

// Worst-case INR at one point; the hot path of the separation solver.
double worst_case_inr_db(const ScenarioConfig& scenario, double slant_km,
                         double separation_km, double alpha_deg);

struct SweepRow {
  double value = 0.0;
  double alpha_deg = 0.0;
  PointEvaluation point;
};

struct SweepResult {
  SweepVariable variable = SweepVariable::slant_range;
  std::vector<SweepRow> rows;  // ordered by (alpha, value)
};

class SweepError : public std::runtime_error {
 public:
  SweepError(double alpha_deg, double value, const std::string& what);
  double alpha_deg() const { return alpha_deg_; }
  double value() const { return value_; }

 private:
  double alpha_deg_;
  double value_;
};

// Mean per-run channel gain for a row whose UE sees the satellite at
// `elevation_deg`; the nearest tabulated elevation not above it is used.
double monte_carlo_channel_gain_db(const ScenarioConfig& scenario,
                                   const LmsEnvironmentTable& table,
                                   double elevation_deg, std::uint64_t seed, int runs);

SweepResult run_sweep(const SweepSpec& spec, const ScenarioConfig& scenario);

// Per-row seed, independent of evaluation order.
std::uint64_t row_seed(std::uint64_t master, double alpha_deg, double value);

std::vector<double> default_probe_alphas();  // 0, 5, ..., 180

struct SolverOptions {
  std::vector<double> probe_alphas_deg = default_probe_alphas();
  double coarse_step_km = 1.0;
  double tolerance_km = 0.1;
};

struct SeparationResult {
  bool resolved = true;
  double separation_km = 0.0;
  // Direction that sets the result; empty when INR <= 0 everywhere.
  std::optional<double> binding_alpha_deg;
  double validity_bound_km = 0.0;  // largest separation with elevation >= min
};

// Smallest separation s with worst-case INR <= 0 dB at every probe alpha and
// every separation in [s, validity bound].
SeparationResult zero_db_separation(double slant_km, const ScenarioConfig& scenario,
                                    const SolverOptions& options = {});

// Same search for a single direction. Empty when unresolvable.
std::optional<double> zero_db_separation_for_alpha(double slant_km, double alpha_deg,
                                                   double validity_bound_km,
                                                   const ScenarioConfig& scenario,
                                                   const SolverOptions& options);

// Slant range where the binding direction moves from the far side of the
// beam (alpha > 90) to the near side (alpha < 90). Empty when it never does.
std::optional<double> dominant_alpha_crossover(const ScenarioConfig& scenario,
                                               const SolverOptions& options = {});

}  // namespace satcoex
