#pragma once

#include <string>

#include "satcoex/antenna.hpp"
#include "satcoex/geometry.hpp"
#include "satcoex/link_budget.hpp"
#include "satcoex/lms_table.hpp"
#include "satcoex/propagation.hpp"

namespace satcoex {

// Inputs of the stochastic channel (Monte Carlo sweeps and channel statistics).
struct ChannelSettings {
  std::string table_path;  // empty selects the built-in synthetic table
  Environment environment = Environment::urban;
  std::string band = "S";
  double ue_speed_mps = 3.0;
  double ue_azimuth_deg = 0.0;
  double run_duration = 60.0;  // in the table's duration unit
  bool doppler_compensated = true;
  double transition_s = 0.0;
};

// Complete scenario; defaults reproduce the S-band reference parameters.
struct ScenarioConfig {
  EarthModel earth;
  SatelliteGeometryConfig satellite;
  double max_operating_slant_km = 1075.19;  // beam-center elevation of 30 deg
  double cell_radius_km = 22.5;
  double carrier_hz = 2.17e9;
  double aperture_diameter_m = 0.44;
  double null_floor_db = -80.0;
  SatelliteRadioConfig radio;
  double latitude_deg = 0.0;
  bool gaseous_enabled = false;
  double gaseous_zenith_db = 0.07;
  bool shadow_clutter_enabled = false;
  ReceiverConfig receiver;
  double worst_case_channel_gain_db = 1.2;
  double min_elevation_deg = kItuMinElevationDeg;
  ChannelSettings channel;

  AperturePattern aperture_pattern() const;
  PropagationConfig propagation() const;
  SatelliteGeometryConfig satellite_at(double slant_km) const;
  UePlacement placement(double separation_km, double alpha_deg) const;

  void validate() const;
};

LmsEnvironmentTable load_channel_table(const ChannelSettings& settings);

}  // namespace satcoex
