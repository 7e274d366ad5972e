#pragma once

namespace satcoex {

// Bessel function of the first kind, order one. Absolute error below 1e-13
// for |x| <= 50.
double bessel_j1(double x);

// Uniformly illuminated circular aperture.
struct AperturePattern {
  double aperture_radius_m = 0.22;  // 0.44 m diameter
  double carrier_hz = 2.17e9;
  double null_floor_db = -80.0;     // clamp applied at and near pattern nulls

  // Aperture circumference in wavelengths, 2*pi*f*a/c.
  double ka() const;
};

struct SatelliteRadioConfig {
  double peak_eirp_per_prb_dbw = 19.24;
  double max_gain_dbi = 40.4;  // metadata only; link budgets use the EIRP
};

// 0 dB at boresight, 10*log10(4 |J1(ka sin t) / (ka sin t)|^2) elsewhere,
// never below the pattern's null floor. Throws std::domain_error for
// |theta| > 90 degrees.
double normalized_gain_db(double theta_deg, const AperturePattern& pattern);

double eirp_toward_dbw(double theta_deg, const SatelliteRadioConfig& radio,
                       const AperturePattern& pattern);

}  // namespace satcoex
