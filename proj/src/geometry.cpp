#include "satcoex/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "satcoex/constants.hpp"

namespace satcoex {
namespace {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

double angle_between(const Vec3& a, const Vec3& b) {
  return std::atan2(norm(cross(a, b)), dot(a, b));
}

double haversine(double x) {
  const double s = std::sin(0.5 * x);
  return s * s;
}

// Point on the unit sphere at colatitude `gamma` and longitude `beta`, with the
// SSP on the +z axis and the beam center in the x-z half plane.
Vec3 unit_point(double gamma, double beta) {
  return {std::sin(gamma) * std::cos(beta), std::sin(gamma) * std::sin(beta),
          std::cos(gamma)};
}

void validate_earth(const EarthModel& earth) {
  if (!(earth.radius_km > 0.0)) {
    throw std::invalid_argument("earth radius must be positive");
  }
}

void validate_altitude(double altitude_km) {
  if (!(altitude_km > 0.0)) {
    throw std::invalid_argument("satellite altitude must be positive");
  }
}

}  // namespace

std::string to_string(ItuCondition condition) {
  switch (condition) {
    case ItuCondition::elevation_below_minimum:
      return "elevation_below_20deg";
    case ItuCondition::frequency_out_of_range:
      return "frequency_outside_1.5_20GHz";
    case ItuCondition::bandwidth_too_wide:
      return "bandwidth_above_5MHz";
  }
  return "unknown";
}

double max_slant_range_km(const EarthModel& earth, double altitude_km) {
  const double r = earth.radius_km;
  const double rs = r + altitude_km;
  return std::sqrt(rs * rs - r * r);
}

double central_angle_from_slant_range(double slant_km, const EarthModel& earth,
                                      double altitude_km) {
  validate_earth(earth);
  validate_altitude(altitude_km);
  const double upper = max_slant_range_km(earth, altitude_km);
  // Admit round-off at both ends of the interval.
  const double tol = 1e-9 * upper;
  if (!(slant_km >= altitude_km - tol && slant_km <= upper + tol)) {
    std::ostringstream msg;
    msg << "slant range " << slant_km << " km outside admissible interval ["
        << altitude_km << ", " << upper << "] km";
    throw std::domain_error(msg.str());
  }
  const double r = earth.radius_km;
  const double h = altitude_km;
  // d^2 = h^2 + 4 R (R+h) sin^2(gamma/2)
  const double excess = std::max(0.0, (slant_km - h) * (slant_km + h));
  const double half_sine = std::sqrt(excess / (4.0 * r * (r + h)));
  return 2.0 * std::asin(std::min(1.0, half_sine));
}

double slant_range_from_central_angle(double gamma_rad, const EarthModel& earth,
                                      double altitude_km) {
  const double r = earth.radius_km;
  const double h = altitude_km;
  const double s = std::sin(0.5 * gamma_rad);
  return std::sqrt(h * h + 4.0 * r * (r + h) * s * s);
}

GeometrySolution solve_geometry(const SatelliteGeometryConfig& sat,
                                const UePlacement& ue,
                                const EarthModel& earth) {
  if (!(ue.cell_radius_km > 0.0)) {
    throw std::invalid_argument("cell radius must be positive");
  }
  if (!(ue.separation_km >= -ue.cell_radius_km)) {
    throw std::invalid_argument(
        "separation distance below -cell_radius (inside the beam center)");
  }
  if (!(ue.alpha_deg >= -180.0 && ue.alpha_deg <= 180.0)) {
    throw std::invalid_argument("alpha must lie in [-180, 180] degrees");
  }

  const double r = earth.radius_km;
  const double h = sat.altitude_km;

  GeometrySolution sol;
  sol.gamma_b_rad = central_angle_from_slant_range(sat.slant_range_km, earth, h);
  sol.gamma_bu_rad = (ue.separation_km + ue.cell_radius_km) / r;
  if (sol.gamma_bu_rad >= kPi) {
    throw std::domain_error("separation distance reaches the antipode");
  }

  const double gb = sol.gamma_b_rad;
  const double gbu = sol.gamma_bu_rad;
  const double alpha = deg_to_rad(ue.alpha_deg);

  // Spherical law of cosines in haversine form; alpha is the included angle
  // at the beam center between the arcs toward the SSP and toward the UE.
  const double hav_u =
      haversine(gb - gbu) + std::sin(gb) * std::sin(gbu) * haversine(alpha);
  sol.gamma_u_rad = 2.0 * std::asin(std::sqrt(std::clamp(hav_u, 0.0, 1.0)));
  const double gu = sol.gamma_u_rad;

  sol.d_u_km = slant_range_from_central_angle(gu, earth, h);

  const double sin_el = ((r + h) * std::cos(gu) - r) / sol.d_u_km;
  sol.elevation_deg = rad_to_deg(std::asin(std::clamp(sin_el, -1.0, 1.0)));

  // Longitude of the UE about the SSP axis, measured from the beam center.
  // Sine from the law of sines, cosine from the law of cosines, both scaled
  // by sin(gb) sin(gu); atan2 keeps it accurate near beta = 0.
  const double beta =
      std::atan2(std::sin(gbu) * std::sin(alpha) * std::sin(gb),
                 std::cos(gbu) - std::cos(gb) * std::cos(gu));

  const Vec3 satellite{0.0, 0.0, r + h};
  const Vec3 beam_center = unit_point(gb, 0.0) * r;
  const Vec3 ue_point = unit_point(gu, beta) * r;
  sol.theta_deg =
      rad_to_deg(angle_between(beam_center - satellite, ue_point - satellite));
  return sol;
}

ItuValidityReport check_itu_validity(const GeometrySolution& solution,
                                     double carrier_hz, double bandwidth_hz) {
  ItuValidityReport report;
  if (solution.elevation_deg < kItuMinElevationDeg) {
    report.violated_conditions.push_back(ItuCondition::elevation_below_minimum);
  }
  if (carrier_hz < kItuMinCarrierHz || carrier_hz > kItuMaxCarrierHz) {
    report.violated_conditions.push_back(ItuCondition::frequency_out_of_range);
  }
  if (bandwidth_hz > kItuMaxBandwidthHz) {
    report.violated_conditions.push_back(ItuCondition::bandwidth_too_wide);
  }
  report.valid = report.violated_conditions.empty();
  return report;
}

ElevationMinimum min_elevation_over_alpha(const SatelliteGeometryConfig& sat,
                                          double separation_km,
                                          double cell_radius_km,
                                          const EarthModel& earth) {
  auto elevation_at = [&](double alpha_deg) {
    return solve_geometry(sat, {separation_km, alpha_deg, cell_radius_km}, earth)
        .elevation_deg;
  };

  ElevationMinimum best{elevation_at(0.0), 0.0};
  for (int step = 1; step <= 180; ++step) {
    const double a = static_cast<double>(step);
    const double e = elevation_at(a);
    if (e < best.elevation_deg) best = {e, a};
  }

  // Golden-section refinement around the best grid point.
  constexpr double kInvPhi = 0.6180339887498949;
  double lo = std::max(0.0, best.alpha_deg - 1.0);
  double hi = std::min(180.0, best.alpha_deg + 1.0);
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = elevation_at(x1);
  double f2 = elevation_at(x2);
  while (hi - lo > 1e-6) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = elevation_at(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = elevation_at(x2);
    }
  }
  for (double a : {x1, x2, lo, hi}) {
    const double e = elevation_at(a);
    if (e < best.elevation_deg) best = {e, a};
  }
  return best;
}

double max_separation_for_min_elevation(const SatelliteGeometryConfig& sat,
                                        double min_elevation_deg,
                                        double cell_radius_km,
                                        const EarthModel& earth) {
  if (!(min_elevation_deg > 0.0 && min_elevation_deg < 90.0)) {
    throw std::invalid_argument("minimum elevation must lie in (0, 90) degrees");
  }
  // Validates the slant range up front.
  central_angle_from_slant_range(sat.slant_range_km, earth, sat.altitude_km);

  auto satisfied = [&](double s) {
    return min_elevation_over_alpha(sat, s, cell_radius_km, earth)
               .elevation_deg >= min_elevation_deg;
  };

  if (!satisfied(0.0)) return 0.0;

  constexpr double kCoarseStepKm = 10.0;
  const double cap = kPi * earth.radius_km - cell_radius_km - 1e-6;
  double good = 0.0;
  double bad = -1.0;
  for (double s = kCoarseStepKm; s < cap; s += kCoarseStepKm) {
    if (!satisfied(s)) {
      bad = s;
      break;
    }
    good = s;
  }
  if (bad < 0.0) return good;

  while (bad - good > 1e-3) {
    const double mid = 0.5 * (good + bad);
    if (satisfied(mid)) {
      good = mid;
    } else {
      bad = mid;
    }
  }
  return good;
}

}  // namespace satcoex
