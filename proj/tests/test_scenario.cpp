// Copyright 2026 the qinsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <map>
#include <string>

#include "errors.hpp"
#include "scenario.hpp"

using namespace qinsim;

TEST_CASE("empty config equals the documented defaults") {
  const Scenario s = parse_scenario("");
  CHECK(s.orbit.altitude_m == 600000.0);
  CHECK(s.orbit.inclination_deg == 60.0);
  CHECK(s.orbit.raan_deg == 72.5);
  CHECK(s.source.pair_efficiency == 0.25);
  CHECK(s.source.rate_hz == 1e9);
  CHECK(s.source.fidelity == 0.99);
  CHECK(s.source.wavelength_m == 1550e-9);
  CHECK(s.converter.efficiency == 0.8);
  CHECK(s.converter.fidelity == 0.98);
  CHECK(s.memory.write_efficiency == 0.98);
  CHECK(s.memory.fidelity == 0.98);
  CHECK(s.memory.modes == 500);
  CHECK(s.memory.storage_time_s == 10e-3);
  CHECK(s.memory.storage_window_s == 250e-12);
  CHECK(s.detectors.efficiency == 0.9);
  CHECK(s.detectors.dark_count_rate_hz == 50.0);
  CHECK(s.bsm.efficiency == 0.5);
  CHECK(s.fiber_attenuation_db_per_km == 0.2);
  CHECK(s.fiber_fidelity == 0.99);
  CHECK(s.freespace_fidelity == 0.99);
  CHECK(s.tx_aperture_m == 0.4);
  CHECK(s.tx_internal == 0.7);
  CHECK(s.zenith_transmittance == 0.2);
  CHECK(s.calern.rx_aperture_m == 1.5);
  CHECK(s.palaiseau.rx_aperture_m == 1.0);
  CHECK(s.calern.rx_internal == 0.1);
  CHECK(s.paris_fiber1_km == 14.0);
  CHECK(s.paris_fiber2_km == 45.0);
  CHECK(s.nice_fiber1_km == 32.0);
  CHECK(s.nice_fiber2_km == 35.0);
  REQUIRE(s.straylight_levels_hz.size() == 3);
  CHECK(s.straylight_levels_hz[0] == 0.0);
  CHECK(s.straylight_levels_hz[1] == 1e3);
  CHECK(s.straylight_levels_hz[2] == 1e5);
  CHECK(s.min_elevation_deg == 20.0);
  CHECK(s.dt_s == 1.0);
  CHECK(s.timeslot_s == 1e-9);
  CHECK_FALSE(s.strict_eq1);
  CHECK_FALSE(s.sat_window_mode);
}

TEST_CASE("every reference parameter maps to exactly one schema key") {
  // Symbol -> (key, default) for the full reference parameter set.
  const std::map<std::string, std::pair<std::string, double>> table = {
      {"altitude", {"orbit.altitude_m", 600000.0}},
      {"inclination", {"orbit.inclination_deg", 60.0}},
      {"raan", {"orbit.raan_deg", 72.5}},
      {"start_date", {"orbit.epoch_s", 24832.0}},
      {"lambda", {"source.wavelength_m", 1550e-9}},
      {"eta_src", {"source.efficiency", 0.25}},
      {"R_src", {"source.rate_hz", 1e9}},
      {"eta_conv", {"converter.efficiency", 0.8}},
      {"F_conv", {"converter.fidelity", 0.98}},
      {"F_src", {"source.fidelity", 0.99}},
      {"eta_QM_W", {"memory.write_efficiency", 0.98}},
      {"F_QM", {"memory.fidelity", 0.98}},
      {"N_modes", {"memory.modes", 500.0}},
      {"tau_QM", {"memory.storage_time_s", 10e-3}},
      {"storage_window", {"memory.storage_window_s", 250e-12}},
      {"eta_det", {"detectors.efficiency", 0.9}},
      {"R_dc", {"detectors.dark_count_rate_hz", 50.0}},
      {"eta_BSM", {"bsm.efficiency", 0.5}},
      {"alpha_fiber", {"fiber.attenuation_db_per_km", 0.2}},
      {"F_fiber", {"fiber.fidelity", 0.99}},
      {"D_TX", {"spacelink.tx_aperture_m", 0.4}},
      {"D_RX_calern", {"stations.calern.rx_aperture_m", 1.5}},
      {"D_RX_palaiseau", {"stations.palaiseau.rx_aperture_m", 1.0}},
      {"F_freespace", {"spacelink.fidelity", 0.99}},
      {"eta_atm0", {"spacelink.zenith_transmittance", 0.2}},
      {"eta_cR_calern", {"stations.calern.rx_internal", 0.1}},
      {"eta_cR_palaiseau", {"stations.palaiseau.rx_internal", 0.1}},
      {"eta_cT", {"spacelink.tx_internal", 0.7}},
  };

  const Scenario s = default_scenario();
  const auto& keys = schema();
  for (const auto& [symbol, entry] : table) {
    CAPTURE(symbol);
    const auto hits = std::count_if(keys.begin(), keys.end(), [&](const KeyInfo& k) {
      return entry.first == k.key;
    });
    CHECK(hits == 1);
    CHECK(std::strtod(get_key(s, entry.first).c_str(), nullptr) == entry.second);
  }
}

TEST_CASE("schema docs exist for every key") {
  for (const KeyInfo& key : schema()) {
    CHECK(key.key != nullptr);
    CHECK(std::strlen(key.doc) > 4);
  }
}

TEST_CASE("out-of-range value names the key") {
  try {
    parse_scenario("detectors.efficiency = 1.2\n");
    FAIL("expected config_error");
  } catch (const config_error& e) {
    CHECK(std::string(e.what()).find("detectors.efficiency") != std::string::npos);
    CHECK(std::string(e.what()).find("1.2") != std::string::npos);
  }
}

TEST_CASE("unknown keys are rejected with their name") {
  try {
    parse_scenario("# a comment\nsource.rate_hz = 1e9\nsources.rate = 2\n");
    FAIL("expected config_error");
  } catch (const config_error& e) {
    const std::string what = e.what();
    CHECK(what.find("sources.rate") != std::string::npos);
    CHECK(what.find("line 3") != std::string::npos);
  }
}

TEST_CASE("malformed lines are rejected") {
  CHECK_THROWS_AS(parse_scenario("just some words\n"), config_error);
  CHECK_THROWS_AS(parse_scenario("source.rate_hz = banana\n"), config_error);
  CHECK_THROWS_AS(parse_scenario("memory.modes = 2.5\n"), config_error);
  CHECK_THROWS_AS(parse_scenario("sim.strict_eq1 = maybe\n"), config_error);
  CHECK_THROWS_AS(parse_scenario("sim.seed = -1\n"), config_error);
  CHECK_THROWS_AS(parse_scenario("straylight.levels_hz = 0,1e3,0\n"), config_error);
  CHECK_THROWS_AS(parse_scenario("straylight.levels_hz = \n"), config_error);
  CHECK_THROWS_AS(parse_scenario("sim.t0_s = 100\nsim.t1_s = 50\n"), config_error);
}

TEST_CASE("values parse with units and scientific notation") {
  const Scenario s = parse_scenario(
      "source.rate_hz = 1e9\n"
      "memory.modes = 64\n"
      "sim.seed = 1234567890123\n"
      "sim.sat_window_mode = true\n"
      "straylight.levels_hz = 0, 250, 3.5e4\n"
      "stations.calern.longitude_deg = -12.25  # comment after value\n");
  CHECK(s.source.rate_hz == 1e9);
  CHECK(s.memory.modes == 64);
  CHECK(s.seed == 1234567890123ull);
  CHECK(s.sat_window_mode);
  REQUIRE(s.straylight_levels_hz.size() == 3);
  CHECK(s.straylight_levels_hz[1] == 250.0);
  CHECK(s.straylight_levels_hz[2] == 3.5e4);
  CHECK(s.calern.location.longitude_deg == -12.25);
}

TEST_CASE("set and get round-trip through the textual form") {
  Scenario s = default_scenario();
  for (const KeyInfo& key : schema()) {
    const std::string before = get_key(s, key.key);
    set_key(s, key.key, before);
    CHECK(get_key(s, key.key) == before);
  }
}
