#pragma once

#include <numbers>

namespace satcoex {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSpeedOfLight = 299792458.0;     // m/s
inline constexpr double kBoltzmann = 1.380649e-23;       // J/K
inline constexpr double kEarthGm = 3.986004418e14;       // m^3/s^2

inline constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

}  // namespace satcoex
