#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "satcoex/geometry.hpp"

using namespace satcoex;

namespace {

const EarthModel kEarth{};

GeometrySolution solve(double slant, double sep, double alpha) {
  return solve_geometry({600.0, slant}, {sep, alpha, 22.5}, kEarth);
}

}  // namespace

TEST_CASE("central angle from slant range") {
  CHECK(central_angle_from_slant_range(600.0, kEarth, 600.0) == 0.0);
  CHECK(std::fabs(oracle::deg(central_angle_from_slant_range(1075.19, kEarth, 600.0)) - 7.67) <= 0.01);
  // Closed form and bisection oracle both give 5.5588 deg here.
  CHECK(std::fabs(oracle::deg(central_angle_from_slant_range(882.38, kEarth, 600.0)) - 5.5588) <= 1e-4);

  for (double d : {650.0, 882.38, 1075.19, 2000.0}) {
    const double oracle_gb = oracle::central_angle_by_bisection(d, 6378.0, 600.0);
    CHECK(std::fabs(central_angle_from_slant_range(d, kEarth, 600.0) - oracle_gb) < 1e-12);
  }
}

TEST_CASE("central angle rejects slant ranges outside the visible interval") {
  CHECK_THROWS_AS(central_angle_from_slant_range(599.0, kEarth, 600.0), std::domain_error);
  CHECK_THROWS_AS(central_angle_from_slant_range(max_slant_range_km(kEarth, 600.0) + 1.0, kEarth, 600.0),
                  std::domain_error);
  CHECK_NOTHROW(central_angle_from_slant_range(max_slant_range_km(kEarth, 600.0), kEarth, 600.0));
}

TEST_CASE("slant range round trip") {
  for (double d = 600.0; d <= 2800.0; d += 37.3) {
    const double g = central_angle_from_slant_range(d, kEarth, 600.0);
    const double back = slant_range_from_central_angle(g, kEarth, 600.0);
    CHECK(std::fabs(back - d) / d < 1e-9);
  }
}

TEST_CASE("UE at beam center") {
  for (double alpha : {0.0, 45.0, 133.0, 180.0}) {
    const auto s = solve(882.38, -22.5, alpha);
    CHECK(std::fabs(s.theta_deg) < 1e-9);
    CHECK(std::fabs(s.d_u_km - 882.38) < 1e-9);
    CHECK(std::fabs(s.elevation_deg - 40.0) <= 0.1);
  }
}

TEST_CASE("nadir beam, UE at cell edge") {
  const auto s = solve(600.0, 0.0, 0.0);
  CHECK(std::fabs(s.elevation_deg - 87.7) <= 0.2);
  CHECK(std::fabs(s.d_u_km - 600.5) <= 0.05);
}

TEST_CASE("far-side UE at 550 km") {
  const auto s = solve(882.38, 550.0, 180.0);
  CHECK(std::fabs(s.elevation_deg - 20.3) <= 0.3);
  CHECK(std::fabs(s.d_u_km - 1382.0) <= 1.0);
  CHECK(std::fabs(s.theta_deg - 14.5) <= 0.3);
}

TEST_CASE("agreement with the vector oracle over a grid") {
  for (double slant : {600.0, 700.0, 882.38, 1075.19, 1500.0}) {
    for (double sep : {-22.5, 0.0, 40.0, 100.0, 320.0, 700.0}) {
      for (double alpha = 0.0; alpha <= 180.0; alpha += 15.0) {
        const auto s = solve(slant, sep, alpha);
        const auto o = oracle::geometry(slant, sep, alpha);
        INFO(slant, " ", sep, " ", alpha);
        CHECK(std::fabs(s.d_u_km - o.d_u_km) < 1e-6);
        CHECK(std::fabs(s.elevation_deg - o.elevation_deg) < 1e-7);
        CHECK(std::fabs(s.theta_deg - o.theta_deg) < 1e-7);
      }
    }
  }
}

TEST_CASE("elevation is non-increasing and theta decreasing in slant range") {
  for (double alpha : {0.0, 45.0, 90.0, 135.0, 180.0}) {
    double prev_el = 1e9;
    double prev_theta = 1e9;
    for (double d = 600.0; d <= 1075.19; d += 5.0) {
      const auto s = solve(d, 100.0, alpha);
      // Until the beam is further from the SSP than the UE is from the beam,
      // a near-side UE is still passing under the satellite and both angles
      // can grow.
      if (alpha < 90.0 && s.gamma_b_rad < s.gamma_bu_rad) continue;
      CHECK(s.elevation_deg <= prev_el + 1e-12);
      CHECK(s.theta_deg < prev_theta);
      prev_el = s.elevation_deg;
      prev_theta = s.theta_deg;
    }
  }
}

TEST_CASE("mirror symmetry in alpha") {
  for (double alpha : {10.0, 60.0, 120.0, 179.0}) {
    const auto p = solve(950.0, 130.0, alpha);
    const auto m = solve(950.0, 130.0, -alpha);
    CHECK(p.d_u_km == doctest::Approx(m.d_u_km).epsilon(1e-14));
    CHECK(p.elevation_deg == doctest::Approx(m.elevation_deg).epsilon(1e-14));
    CHECK(p.theta_deg == doctest::Approx(m.theta_deg).epsilon(1e-14));
  }
}

TEST_CASE("nadir beam is independent of alpha") {
  const auto ref = solve(600.0, 80.0, 0.0);
  for (double alpha = 0.0; alpha <= 180.0; alpha += 10.0) {
    const auto s = solve(600.0, 80.0, alpha);
    CHECK(std::fabs(s.d_u_km - ref.d_u_km) < 1e-9);
    CHECK(std::fabs(s.elevation_deg - ref.elevation_deg) < 1e-9);
    CHECK(std::fabs(s.theta_deg - ref.theta_deg) < 1e-9);
  }
}

TEST_CASE("invalid placements") {
  CHECK_THROWS(solve(882.38, -30.0, 0.0));
  CHECK_THROWS(solve(882.38, 10.0, 200.0));
  CHECK_THROWS(solve_geometry({600.0, 882.38}, {10.0, 0.0, -1.0}, kEarth));
}

TEST_CASE("ITU validity") {
  GeometrySolution g;
  g.elevation_deg = 40.0;
  CHECK(check_itu_validity(g, 2.17e9, 180e3).valid);

  g.elevation_deg = 8.0;
  auto r = check_itu_validity(g, 2.17e9, 180e3);
  CHECK_FALSE(r.valid);
  REQUIRE(r.violated_conditions.size() == 1);
  CHECK(r.violated_conditions[0] == ItuCondition::elevation_below_minimum);

  g.elevation_deg = 45.0;
  r = check_itu_validity(g, 28e9, 180e3);
  CHECK_FALSE(r.valid);
  REQUIRE(r.violated_conditions.size() == 1);
  CHECK(r.violated_conditions[0] == ItuCondition::frequency_out_of_range);

  r = check_itu_validity(g, 2.17e9, 10e6);
  CHECK_FALSE(r.valid);
  CHECK(r.violated_conditions[0] == ItuCondition::bandwidth_too_wide);
}

TEST_CASE("minimum elevation over alpha matches a dense oracle scan") {
  for (double sep : {100.0, 400.0}) {
    const auto m = min_elevation_over_alpha({600.0, 882.38}, sep, 22.5, kEarth);
    double lowest = 1e9;
    for (double a = 0.0; a <= 180.0; a += 0.05) {
      lowest = std::fmin(lowest, oracle::geometry(882.38, sep, a).elevation_deg);
    }
    CHECK(m.elevation_deg <= lowest + 1e-9);
    CHECK(m.elevation_deg >= lowest - 1e-4);
  }
}

TEST_CASE("maximum separation for a 20 degree floor") {
  for (double slant : {600.0, 882.38, 1075.0}) {
    const double s = max_separation_for_min_elevation({600.0, slant}, 20.0, 22.5, kEarth);
    const auto at = min_elevation_over_alpha({600.0, slant}, s, 22.5, kEarth);
    CHECK(at.elevation_deg == doctest::Approx(20.0).epsilon(1e-4));
    CHECK(min_elevation_over_alpha({600.0, slant}, s + 0.5, 22.5, kEarth).elevation_deg < 20.0);
  }
  CHECK(std::fabs(max_separation_for_min_elevation({600.0, 882.38}, 20.0, 22.5, kEarth) - 550.0) <= 25.0);
  CHECK(std::fabs(max_separation_for_min_elevation({600.0, 1075.0}, 20.0, 22.5, kEarth) - 320.0) <= 25.0);
  // Beam center already below the floor.
  CHECK(max_separation_for_min_elevation({600.0, 2500.0}, 20.0, 22.5, kEarth) == 0.0);
}
