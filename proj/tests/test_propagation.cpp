#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "satcoex/propagation.hpp"

using namespace satcoex;

TEST_CASE("free-space loss") {
  CHECK(std::fabs(fspl_db(600.0, 2.17e9) - 154.74) <= 0.01);
  CHECK(std::fabs(fspl_db(882.38, 2.17e9) - 158.09) <= 0.01);
  CHECK(fspl_db(1000.0, 2.17e9) - fspl_db(500.0, 2.17e9) == doctest::Approx(20.0 * std::log10(2.0)).epsilon(1e-12));
  for (double d = 300.0; d < 3000.0; d += 123.0) {
    CHECK(std::fabs(fspl_db(d, 2.17e9) - oracle::fspl_db(d, 2.17e9)) < 1e-10);
    CHECK(fspl_db(d + 1.0, 2.17e9) > fspl_db(d, 2.17e9));
    CHECK(fspl_db(d, 2.2e9) > fspl_db(d, 2.17e9));
  }
  CHECK_THROWS_AS(fspl_db(0.0, 2.17e9), std::domain_error);
}

TEST_CASE("gaseous absorption") {
  PropagationConfig on;
  on.gaseous_model_enabled = true;
  CHECK(gaseous_attenuation_db(90.0, on) == doctest::Approx(0.07));
  CHECK(gaseous_attenuation_db(30.0, on) == doctest::Approx(0.14));
  CHECK(gaseous_attenuation_db(30.0, PropagationConfig{}) == 0.0);
  CHECK_THROWS_AS(gaseous_attenuation_db(0.0, on), std::domain_error);
}

TEST_CASE("scintillation") {
  CHECK(std::fabs(scintillation_db(4e9, 0.0) - 0.7778) <= 1e-4);
  CHECK(std::fabs(scintillation_db(2.17e9, 10.0) - 1.947) <= 0.005);
  CHECK(std::fabs(scintillation_db(2.17e9, 10.0) - oracle::scint_db(2.17e9, 10.0)) <= 1e-4);
  CHECK(scintillation_db(2.17e9, 45.0) == 0.0);
  CHECK(scintillation_db(2.17e9, -20.0) == scintillation_db(2.17e9, 20.0));
  CHECK(scintillation_db(2.17e9, 20.01) == 0.0);
}

TEST_CASE("total loss composition") {
  GeometrySolution g;
  g.d_u_km = 882.38;
  g.elevation_deg = 40.0;

  PropagationConfig cfg;
  cfg.latitude_deg = 10.0;
  const auto off = total_path_loss(g, cfg);
  CHECK(off.gaseous_db == 0.0);
  CHECK(std::fabs(off.total_db - 160.04) <= 0.02);
  CHECK(off.total_db - (off.fspl_db + off.gaseous_db + off.scintillation_db) == 0.0);

  cfg.gaseous_model_enabled = true;
  const auto on = total_path_loss(g, cfg);
  CHECK(std::fabs(on.total_db - off.total_db - 0.109) <= 0.001);

  cfg.latitude_deg = 45.0;
  const auto high = total_path_loss(g, cfg);
  CHECK(high.scintillation_db == 0.0);
  CHECK(high.total_db == high.fspl_db + high.gaseous_db);
}

TEST_CASE("scintillation does not depend on geometry") {
  PropagationConfig cfg;
  const double ref = scintillation_db(cfg.carrier_hz, cfg.latitude_deg);
  for (double d = 600.0; d <= 2000.0; d += 100.0) {
    for (double el = 5.0; el <= 90.0; el += 17.0) {
      GeometrySolution g;
      g.d_u_km = d;
      g.elevation_deg = el;
      CHECK(total_path_loss(g, cfg).scintillation_db == ref);
    }
  }
}

TEST_CASE("total loss grows with distance") {
  PropagationConfig cfg;
  cfg.gaseous_model_enabled = true;
  double prev = 0.0;
  for (double d = 600.0; d <= 2000.0; d += 50.0) {
    GeometrySolution g;
    g.d_u_km = d;
    g.elevation_deg = 35.0;
    const double t = total_path_loss(g, cfg).total_db;
    CHECK(t > prev);
    prev = t;
  }
}

TEST_CASE("shadowing and clutter cannot be enabled") {
  PropagationConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.shadow_fading_and_clutter_enabled = true;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
