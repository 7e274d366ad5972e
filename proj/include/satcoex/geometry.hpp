#pragma once

// Spherical-Earth geometry of a LEO beam and an off-beam terrestrial UE.
//
// Frame: the sub-satellite point (SSP), the beam center and the UE all sit on
// a sphere of radius R; the satellite is at altitude h above the SSP. The UE
// is placed by its surface distance from the beam center and by the azimuth
// alpha measured at the beam center from the direction of the SSP
// (alpha = 0 puts the UE between the beam center and the SSP).

#include <string>
#include <vector>

namespace satcoex {

struct EarthModel {
  double radius_km = 6378.0;
};

struct SatelliteGeometryConfig {
  double altitude_km = 600.0;
  double slant_range_km = 882.38;  // satellite to beam center
};

struct UePlacement {
  double separation_km = 100.0;  // great-circle distance from the cell edge
  double alpha_deg = 0.0;
  double cell_radius_km = 22.5;
};

struct GeometrySolution {
  double gamma_b_rad = 0.0;   // SSP -> beam center
  double gamma_bu_rad = 0.0;  // beam center -> UE
  double gamma_u_rad = 0.0;   // SSP -> UE
  double d_u_km = 0.0;        // UE to satellite
  double elevation_deg = 0.0; // seen from the UE
  double theta_deg = 0.0;     // boresight misalignment at the satellite
};

enum class ItuCondition {
  elevation_below_minimum,
  frequency_out_of_range,
  bandwidth_too_wide,
};

std::string to_string(ItuCondition condition);

struct ItuValidityReport {
  bool valid = true;
  std::vector<ItuCondition> violated_conditions;
};

// Limits of applicability of the two-state land-mobile-satellite model.
inline constexpr double kItuMinElevationDeg = 20.0;
inline constexpr double kItuMinCarrierHz = 1.5e9;
inline constexpr double kItuMaxCarrierHz = 20e9;
inline constexpr double kItuMaxBandwidthHz = 5e6;

// Largest slant range still above the horizon: sqrt((R+h)^2 - R^2).
double max_slant_range_km(const EarthModel& earth, double altitude_km);

// Earth-central angle between the SSP and a ground point seen at slant range
// `slant_km`. Throws std::domain_error outside [h, max_slant_range_km].
double central_angle_from_slant_range(double slant_km, const EarthModel& earth,
                                      double altitude_km);

// Inverse of central_angle_from_slant_range.
double slant_range_from_central_angle(double gamma_rad, const EarthModel& earth,
                                      double altitude_km);

// Throws std::invalid_argument / std::domain_error on inputs that violate the
// type invariants. Negative alpha is accepted and mirrors the positive one.
GeometrySolution solve_geometry(const SatelliteGeometryConfig& sat,
                                const UePlacement& ue,
                                const EarthModel& earth);

ItuValidityReport check_itu_validity(const GeometrySolution& solution,
                                     double carrier_hz, double bandwidth_hz);

// Lowest UE elevation over alpha in [0, 180] at the given separation, and the
// alpha where it occurs. The minimizing direction is searched, not assumed.
struct ElevationMinimum {
  double elevation_deg = 0.0;
  double alpha_deg = 0.0;
};
ElevationMinimum min_elevation_over_alpha(const SatelliteGeometryConfig& sat,
                                          double separation_km,
                                          double cell_radius_km,
                                          const EarthModel& earth);

// Largest separation such that the UE elevation is at least
// `min_elevation_deg` for every alpha. Returns 0 when even separation 0
// violates the bound. Coarse scan followed by bisection.
double max_separation_for_min_elevation(const SatelliteGeometryConfig& sat,
                                        double min_elevation_deg,
                                        double cell_radius_km,
                                        const EarthModel& earth);

}  // namespace satcoex
