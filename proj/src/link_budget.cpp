#include "satcoex/link_budget.hpp"

#include <cmath>
#include <stdexcept>

#include "satcoex/constants.hpp"

namespace satcoex {

void ReceiverConfig::validate() const {
  if (!(equivalent_temperature_k > 0.0)) {
    throw std::invalid_argument("equivalent temperature must be positive");
  }
  if (!(prb_bandwidth_hz > 0.0)) {
    throw std::invalid_argument("PRB bandwidth must be positive");
  }
}

double noise_power_dbm(const ReceiverConfig& rx) {
  rx.validate();
  return dbw_to_dbm(
      10.0 * std::log10(kBoltzmann * rx.equivalent_temperature_k * rx.prb_bandwidth_hz));
}

double reconstruct_rx_power_dbm(const LinkBudgetBreakdown& b) {
  return dbw_to_dbm(b.eirp_dbw) - b.path_loss.total_db + b.channel_gain_db +
         b.rx_antenna_gain_dbi;
}

LinkBudgetBreakdown evaluate_link_budget(const GeometrySolution& geometry,
                                         const PathLossBreakdown& path_loss,
                                         double channel_gain_db,
                                         const SatelliteRadioConfig& radio,
                                         const AperturePattern& pattern,
                                         const ReceiverConfig& rx) {
  LinkBudgetBreakdown b;
  b.normalized_gain_db = normalized_gain_db(geometry.theta_deg, pattern);
  b.eirp_dbw = radio.peak_eirp_per_prb_dbw + b.normalized_gain_db;
  b.path_loss = path_loss;
  b.channel_gain_db = channel_gain_db;
  b.rx_antenna_gain_dbi = rx.antenna_gain_dbi;
  b.rx_power_dbm = reconstruct_rx_power_dbm(b);
  b.noise_dbm = noise_power_dbm(rx);
  b.inr_db = inr_db(b.rx_power_dbm, b.noise_dbm);
  return b;
}

double rx_power_dbm(const GeometrySolution& geometry, const PathLossBreakdown& path_loss,
                    double channel_gain_db, const SatelliteRadioConfig& radio,
                    const AperturePattern& pattern, const ReceiverConfig& rx) {
  return evaluate_link_budget(geometry, path_loss, channel_gain_db, radio, pattern, rx)
      .rx_power_dbm;
}

}  // namespace satcoex
