#include "satcoex/propagation.hpp"

#include <cmath>
#include <stdexcept>

#include "satcoex/constants.hpp"

namespace satcoex {
namespace {

// Peak-to-peak fluctuation at 4 GHz on equatorial paths.
constexpr double kPeakFluctuationAt4GhzDb = 1.1;
constexpr double kScintillationMaxLatitudeDeg = 20.0;

}  // namespace

void PropagationConfig::validate() const {
  if (!(carrier_hz > 0.0)) {
    throw std::invalid_argument("carrier frequency must be positive");
  }
  if (!(latitude_deg >= -90.0 && latitude_deg <= 90.0)) {
    throw std::invalid_argument("latitude must lie in [-90, 90] degrees");
  }
  if (!(gaseous_zenith_attenuation_db >= 0.0)) {
    throw std::invalid_argument("zenith gaseous attenuation must be >= 0 dB");
  }
  if (shadow_fading_and_clutter_enabled) {
    throw std::invalid_argument(
        "shadow fading / clutter loss cannot be combined with the two-state "
        "channel, which already models them");
  }
}

double fspl_db(double distance_km, double carrier_hz) {
  if (!(distance_km > 0.0) || !(carrier_hz > 0.0)) {
    throw std::domain_error("free-space loss needs positive distance and frequency");
  }
  return 20.0 * std::log10(4.0 * kPi * distance_km * 1e3 * carrier_hz /
                           kSpeedOfLight);
}

double gaseous_attenuation_db(double elevation_deg,
                              const PropagationConfig& config) {
  if (!(elevation_deg > 0.0 && elevation_deg <= 90.0)) {
    throw std::domain_error("gaseous attenuation needs elevation in (0, 90] degrees");
  }
  if (!config.gaseous_model_enabled) return 0.0;
  return config.gaseous_zenith_attenuation_db / std::sin(deg_to_rad(elevation_deg));
}

double scintillation_db(double carrier_hz, double latitude_deg) {
  if (!(carrier_hz > 0.0)) {
    throw std::domain_error("carrier frequency must be positive");
  }
  if (std::abs(latitude_deg) > kScintillationMaxLatitudeDeg) return 0.0;
  const double f_ghz = carrier_hz * 1e-9;
  return kPeakFluctuationAt4GhzDb / std::sqrt(2.0) * std::pow(f_ghz / 4.0, -1.5);
}

PathLossBreakdown total_path_loss(const GeometrySolution& solution,
                                  const PropagationConfig& config) {
  PathLossBreakdown out;
  out.fspl_db = fspl_db(solution.d_u_km, config.carrier_hz);
  out.gaseous_db = config.gaseous_model_enabled
                       ? gaseous_attenuation_db(solution.elevation_deg, config)
                       : 0.0;
  out.scintillation_db = scintillation_db(config.carrier_hz, config.latitude_deg);
  out.total_db = out.fspl_db + out.gaseous_db + out.scintillation_db;
  return out;
}

}  // namespace satcoex
