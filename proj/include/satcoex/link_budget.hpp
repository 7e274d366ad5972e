#pragma once

#include "satcoex/antenna.hpp"
#include "satcoex/geometry.hpp"
#include "satcoex/propagation.hpp"

namespace satcoex {

struct ReceiverConfig {
  double antenna_gain_dbi = 0.0;
  double equivalent_temperature_k = 2303.55;
  double prb_bandwidth_hz = 180e3;

  void validate() const;
};

// Every additive term of the per-PRB received interference power.
struct LinkBudgetBreakdown {
  double eirp_dbw = 0.0;           // peak EIRP + normalized gain
  double normalized_gain_db = 0.0;
  PathLossBreakdown path_loss;
  double channel_gain_db = 0.0;
  double rx_antenna_gain_dbi = 0.0;
  double rx_power_dbm = 0.0;
  double noise_dbm = 0.0;
  double inr_db = 0.0;
};

// The single dBW -> dBm conversion point.
inline constexpr double dbw_to_dbm(double dbw) { return dbw + 30.0; }

// 10*log10(k T B) + 30.
double noise_power_dbm(const ReceiverConfig& rx);

double rx_power_dbm(const GeometrySolution& geometry, const PathLossBreakdown& path_loss,
                    double channel_gain_db, const SatelliteRadioConfig& radio,
                    const AperturePattern& pattern, const ReceiverConfig& rx);

inline double inr_db(double rx_power_dbm, double noise_dbm) {
  return rx_power_dbm - noise_dbm;
}

LinkBudgetBreakdown evaluate_link_budget(const GeometrySolution& geometry,
                                         const PathLossBreakdown& path_loss,
                                         double channel_gain_db,
                                         const SatelliteRadioConfig& radio,
                                         const AperturePattern& pattern,
                                         const ReceiverConfig& rx);

// Recomputes rx power from the stored terms in the same order.
double reconstruct_rx_power_dbm(const LinkBudgetBreakdown& b);

}  // namespace satcoex
