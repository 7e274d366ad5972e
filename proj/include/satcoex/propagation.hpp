#pragma once

#include "satcoex/geometry.hpp"

namespace satcoex {

struct PropagationConfig {
  double carrier_hz = 2.17e9;
  double latitude_deg = 0.0;
  double gaseous_zenith_attenuation_db = 0.07;
  bool gaseous_model_enabled = false;
  // Shadow fading and clutter loss are already part of the two-state channel;
  // validate() rejects enabling them.
  bool shadow_fading_and_clutter_enabled = false;

  void validate() const;
};

struct PathLossBreakdown {
  double fspl_db = 0.0;
  double gaseous_db = 0.0;
  double scintillation_db = 0.0;
  double total_db = 0.0;
};

// 20*log10(4*pi*d*f/c).
double fspl_db(double distance_km, double carrier_hz);

// Cosecant law on a flat layered atmosphere.
double gaseous_attenuation_db(double elevation_deg,
                              const PropagationConfig& config);

// Ionospheric scintillation loss, nonzero only within +/-20 deg latitude.
double scintillation_db(double carrier_hz, double latitude_deg);

PathLossBreakdown total_path_loss(const GeometrySolution& solution,
                                  const PropagationConfig& config);

}  // namespace satcoex
