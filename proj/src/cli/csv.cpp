#include "satcoex/cli/csv.hpp"

#include <cstdio>
#include <ostream>

namespace satcoex::cli {

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  out << kSweepHeader << '\n';
  for (const auto& row : result.rows) {
    const auto& g = row.point.geometry;
    const auto& b = row.point.budget;
    out << format_value(row.value) << ',' << format_value(row.alpha_deg) << ','
        << format_value(g.elevation_deg) << ',' << format_value(g.theta_deg) << ','
        << format_value(b.eirp_dbw) << ',' << format_value(b.path_loss.fspl_db) << ','
        << format_value(b.path_loss.gaseous_db) << ','
        << format_value(b.path_loss.scintillation_db) << ','
        << format_value(b.channel_gain_db) << ',' << format_value(b.rx_power_dbm) << ','
        << format_value(b.noise_dbm) << ',' << format_value(b.inr_db) << ','
        << (row.point.validity.valid ? 1 : 0) << '\n';
  }
}

void write_min_separation_csv(std::ostream& out, const std::vector<MinSeparationRow>& rows) {
  out << kMinSeparationHeader << '\n';
  for (const auto& row : rows) {
    out << format_value(row.slant_km) << ',';
    if (row.result.resolved) {
      out << format_value(row.result.separation_km);
    } else {
      out << "unresolvable";
    }
    out << ',';
    if (row.result.binding_alpha_deg) {
      out << format_value(*row.result.binding_alpha_deg);
    } else {
      out << "none";
    }
    out << '\n';
  }
}

void write_channel_stats_csv(std::ostream& out, const std::vector<ChannelStatsRow>& rows) {
  out << kChannelStatsHeader << '\n';
  for (const auto& r : rows) {
    out << r.environment << ',' << r.elevation_deg << ',' << format_value(r.stats.mean_db)
        << ',' << format_value(r.stats.ci_low_db) << ',' << format_value(r.stats.ci_high_db)
        << ',' << r.stats.runs << ',' << (r.synthetic_table ? 1 : 0) << '\n';
  }
}

}  // namespace satcoex::cli
