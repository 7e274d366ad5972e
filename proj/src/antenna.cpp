#include "satcoex/antenna.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "satcoex/constants.hpp"

namespace satcoex {
namespace {

// Ascending series sum_k (-1)^k (x/2)^(2k+1) / (k! (k+1)!). Cancellation stays
// below 1e-14 for |x| < 8.
double j1_series(double x) {
  const double half = 0.5 * x;
  const double q = -half * half;
  double term = half;
  double sum = term;
  for (int k = 1; k < 60; ++k) {
    term *= q / (static_cast<double>(k) * static_cast<double>(k + 1));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// Miller's backward recurrence J_{n-1} = (2n/x) J_n - J_{n+1}, normalized with
// J_0 + 2 sum_k J_{2k} = 1.
double j1_backward(double x) {
  const int start = 2 * ((static_cast<int>(1.2 * x) + 40) / 2);
  double next = 0.0;   // J_{n+1}
  double cur = 1e-30;  // J_n
  double j1 = 0.0;
  double norm = 0.0;
  for (int n = start; n > 0; --n) {
    const double prev = (2.0 * n / x) * cur - next;
    next = cur;
    cur = prev;  // now J_{n-1}
    if (n - 1 == 1) j1 = cur;
    if ((n - 1) % 2 == 0 && n - 1 > 0) norm += 2.0 * cur;
    if (std::abs(cur) > 1e200) {
      cur *= 1e-200;
      next *= 1e-200;
      j1 *= 1e-200;
      norm *= 1e-200;
    }
  }
  norm += cur;  // J_0
  return j1 / norm;
}

}  // namespace

double bessel_j1(double x) {
  if (x == 0.0) return 0.0;
  const double ax = std::abs(x);
  const double value = ax < 8.0 ? j1_series(ax) : j1_backward(ax);
  return x < 0.0 ? -value : value;
}

double AperturePattern::ka() const {
  return 2.0 * kPi * carrier_hz * aperture_radius_m / kSpeedOfLight;
}

double normalized_gain_db(double theta_deg, const AperturePattern& pattern) {
  if (!(std::abs(theta_deg) <= 90.0)) {
    throw std::domain_error("misalignment angle outside [-90, 90] degrees");
  }
  if (!(pattern.aperture_radius_m > 0.0) || !(pattern.carrier_hz > 0.0)) {
    throw std::invalid_argument("aperture radius and carrier must be positive");
  }
  if (theta_deg == 0.0) return 0.0;

  const double u = pattern.ka() * std::sin(deg_to_rad(std::abs(theta_deg)));
  const double ratio = bessel_j1(u) / u;
  const double linear = 4.0 * ratio * ratio;
  if (!(linear > 0.0)) return pattern.null_floor_db;
  return std::clamp(10.0 * std::log10(linear), pattern.null_floor_db, 0.0);
}

double eirp_toward_dbw(double theta_deg, const SatelliteRadioConfig& radio,
                       const AperturePattern& pattern) {
  return radio.peak_eirp_per_prb_dbw + normalized_gain_db(theta_deg, pattern);
}

}  // namespace satcoex
