#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "satcoex/lms_channel.hpp"
#include "satcoex/sweep.hpp"

namespace satcoex::cli {

// Six significant digits, "%.6g".
std::string format_value(double v);

inline constexpr const char* kSweepHeader =
    "variable,alpha_deg,elevation_deg,theta_deg,eirp_dbw,fspl_db,gaseous_db,scint_db,"
    "channel_gain_db,rx_dbm,noise_dbm,inr_db,itu_valid";

void write_sweep_csv(std::ostream& out, const SweepResult& result);

struct MinSeparationRow {
  double slant_km = 0.0;
  SeparationResult result;
};

inline constexpr const char* kMinSeparationHeader = "slant_km,min_separation_km,binding_alpha_deg";

void write_min_separation_csv(std::ostream& out, const std::vector<MinSeparationRow>& rows);

struct ChannelStatsRow {
  std::string environment;
  int elevation_deg = 0;
  GainStatistics stats;
  bool synthetic_table = false;
};

inline constexpr const char* kChannelStatsHeader =
    "environment,elevation_deg,mean_gain_db,ci_low_db,ci_high_db,runs,synthetic_table";

void write_channel_stats_csv(std::ostream& out, const std::vector<ChannelStatsRow>& rows);

}  // namespace satcoex::cli
