#include "satcoex/scenario.hpp"

#include <stdexcept>

namespace satcoex {

AperturePattern ScenarioConfig::aperture_pattern() const {
  return {0.5 * aperture_diameter_m, carrier_hz, null_floor_db};
}

PropagationConfig ScenarioConfig::propagation() const {
  return {carrier_hz, latitude_deg, gaseous_zenith_db, gaseous_enabled,
          shadow_clutter_enabled};
}

SatelliteGeometryConfig ScenarioConfig::satellite_at(double slant_km) const {
  return {satellite.altitude_km, slant_km};
}

UePlacement ScenarioConfig::placement(double separation_km, double alpha_deg) const {
  return {separation_km, alpha_deg, cell_radius_km};
}

void ScenarioConfig::validate() const {
  if (!(earth.radius_km > 0.0)) throw std::invalid_argument("earth_radius_km must be positive");
  if (!(satellite.altitude_km > 0.0)) throw std::invalid_argument("altitude_km must be positive");
  if (!(cell_radius_km > 0.0)) throw std::invalid_argument("cell_radius_km must be positive");
  if (!(aperture_diameter_m > 0.0)) {
    throw std::invalid_argument("aperture_diameter_m must be positive");
  }
  if (!(null_floor_db < 0.0)) throw std::invalid_argument("null_floor_db must be negative");
  if (!(max_operating_slant_km >= satellite.altitude_km &&
        max_operating_slant_km <= max_slant_range_km(earth, satellite.altitude_km))) {
    throw std::invalid_argument("max_operating_slant_km outside [altitude, horizon]");
  }
  if (!(min_elevation_deg > 0.0 && min_elevation_deg < 90.0)) {
    throw std::invalid_argument("min_elevation_deg must lie in (0, 90)");
  }
  if (!(channel.ue_speed_mps >= 0.0)) throw std::invalid_argument("ue_speed_mps must be >= 0");
  if (!(channel.run_duration > 0.0)) throw std::invalid_argument("channel run duration must be positive");
  if (!(channel.transition_s >= 0.0)) throw std::invalid_argument("transition_s must be >= 0");
  propagation().validate();
  receiver.validate();
}

LmsEnvironmentTable load_channel_table(const ChannelSettings& settings) {
  if (settings.table_path.empty()) return synthetic_lms_table();
  return LmsEnvironmentTable::load(settings.table_path);
}

}  // namespace satcoex
