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

#include <cmath>

#include "errors.hpp"
#include "orbit.hpp"

using namespace qinsim;
using namespace qinsim::orbit;

namespace {

OrbitSpec identity_spec() {
  OrbitSpec spec;
  spec.altitude_m = 600000.0;
  spec.inclination_deg = 0.0;
  spec.raan_deg = 0.0;
  spec.arg_of_latitude_epoch_deg = 0.0;
  spec.epoch_s = 0.0;
  return spec;
}

} // namespace

TEST_CASE("identity orientation puts the satellite on the equatorial x axis") {
  EarthModel earth;
  const Vec3 pos = propagate(identity_spec(), earth, 0.0);
  const double a = earth.radius_m + 600000.0;
  CHECK(pos.x == doctest::Approx(a).epsilon(1e-12));
  CHECK(std::abs(pos.y) < 1e-6);
  CHECK(std::abs(pos.z) < 1e-6);
}

TEST_CASE("circular orbit norm is conserved") {
  EarthModel earth;
  OrbitSpec spec;
  spec.altitude_m = 600000.0;
  spec.inclination_deg = 60.0;
  spec.raan_deg = 72.5;
  spec.arg_of_latitude_epoch_deg = 37.85;
  spec.epoch_s = 24832.0;
  const double a = earth.radius_m + spec.altitude_m;
  for (double t : {-500.0, 0.0, 123.456, 9999.0}) {
    CHECK(std::abs(norm(propagate(spec, earth, t)) - a) / a < 1e-9);
    CHECK(std::abs(norm(propagate_inertial(spec, earth, t)) - a) / a < 1e-9);
  }
}

TEST_CASE("orbital period closes the inertial track") {
  EarthModel earth;
  OrbitSpec spec;
  spec.altitude_m = 600000.0;
  spec.inclination_deg = 60.0;
  spec.raan_deg = 72.5;

  // 2*pi*sqrt(a^3/mu) for a = 6 971 000 m, evaluated at high precision.
  const double period = 2.0 * M_PI / mean_motion(spec, earth);
  CHECK(period == doctest::Approx(5792.3341095930903).epsilon(1e-12));

  for (double t : {0.0, 321.0, 4000.5}) {
    const Vec3 p0 = propagate_inertial(spec, earth, t);
    const Vec3 p1 = propagate_inertial(spec, earth, t + period);
    CHECK(norm(p1 - p0) < 1e-6);
  }
}

TEST_CASE("invalid altitude raises a configuration error") {
  EarthModel earth;
  OrbitSpec spec = identity_spec();
  spec.altitude_m = 0.0;
  CHECK_THROWS_AS(propagate(spec, earth, 0.0), config_error);
  spec.altitude_m = -1.0;
  CHECK_THROWS_AS(propagate(spec, earth, 0.0), config_error);
}

TEST_CASE("zenith geometry: elevation pi/2 and range equal to the altitude") {
  EarthModel earth;
  const GeodeticPoint station{12.0, 34.0, 0.0};
  const Vec3 stn = station_position(station, earth);
  const double scale = (earth.radius_m + 600000.0) / earth.radius_m;
  const Vec3 sat{stn.x * scale, stn.y * scale, stn.z * scale};
  const StationSample sample = elevation_and_range(sat, station, earth);
  // asin near 1 amplifies one ulp of the direction cosine to ~1e-8 rad.
  CHECK(sample.elevation_rad == doctest::Approx(M_PI / 2).epsilon(1e-7));
  CHECK(std::abs(sample.slant_range_m - 600000.0) / 600000.0 < 1e-6);
}

TEST_CASE("horizon plane geometry gives zero elevation") {
  EarthModel earth;
  const GeodeticPoint station{0.0, 0.0, 0.0};
  // Satellite in the station's horizontal plane: same x as the station,
  // displaced tangentially.
  const Vec3 sat{earth.radius_m, 2000e3, 0.0};
  const StationSample sample = elevation_and_range(sat, station, earth);
  CHECK(std::abs(sample.elevation_rad) < 1e-12);
}

TEST_CASE("antipodal satellite is below the horizon") {
  EarthModel earth;
  const GeodeticPoint north_pole{90.0, 0.0, 0.0};
  const Vec3 sat{0.0, 0.0, -(earth.radius_m + 600000.0)};
  const StationSample sample = elevation_and_range(sat, north_pole, earth);
  CHECK(sample.elevation_rad < 0.0);
  CHECK(sample.elevation_rad >= -M_PI / 2);
}

TEST_CASE("sample_pass counts samples like an inclusive grid") {
  EarthModel earth;
  const std::vector<GeodeticPoint> stations{{0.0, 0.0, 0.0}};
  const auto samples = sample_pass(identity_spec(), earth, stations, 0.0, 10.0, 1.0);
  REQUIRE(samples.size() == 11);
  CHECK(samples.front().time_s == 0.0);
  CHECK(samples.back().time_s == 10.0);
  CHECK(samples[3].stations.size() == 1);
}

TEST_CASE("sample_pass rejects an empty station list") {
  EarthModel earth;
  CHECK_THROWS_AS(sample_pass(identity_spec(), earth, {}, 0.0, 10.0, 1.0),
                  config_error);
}

TEST_CASE("elevation falls off on both sides of a culmination") {
  EarthModel earth;
  const std::vector<GeodeticPoint> stations{{0.0, 0.0, 0.0}};
  // Equatorial orbit passing the station's zenith at t = 0.
  const auto samples =
      sample_pass(identity_spec(), earth, stations, -40.0, 40.0, 10.0);
  const std::size_t mid = samples.size() / 2;
  CHECK(samples[mid].stations[0].elevation_rad ==
        doctest::Approx(M_PI / 2).epsilon(1e-6));
  for (std::size_t i = 0; i < mid; ++i) {
    CHECK(samples[i].stations[0].elevation_rad <
          samples[i + 1].stations[0].elevation_rad);
    const std::size_t j = samples.size() - 1 - i;
    CHECK(samples[j].stations[0].elevation_rad <
          samples[j - 1].stations[0].elevation_rad);
  }
  for (const auto& s : samples) {
    CHECK(s.stations[0].elevation_rad <= M_PI / 2 + 1e-12);
    CHECK(s.stations[0].elevation_rad >= -M_PI / 2 - 1e-12);
  }
}

TEST_CASE("dual visibility windows from synthetic elevations") {
  auto make = [](std::vector<double> elevations_deg) {
    std::vector<PassSample> samples;
    double t = 0.0;
    for (double e : elevations_deg) {
      PassSample s;
      s.time_s = t++;
      s.stations = {{e * M_PI / 180.0, 1e6}, {e * M_PI / 180.0, 1e6}};
      samples.push_back(s);
    }
    return samples;
  };
  const double mask = 20.0 * M_PI / 180.0;

  SUBCASE("all below the mask") {
    CHECK(find_dual_visibility(make({1, 5, 10, 15}), mask).empty());
  }
  SUBCASE("all above the mask") {
    const auto windows = find_dual_visibility(make({25, 30, 45, 30, 25}), mask);
    REQUIRE(windows.size() == 1);
    CHECK(windows[0].start_s == 0.0);
    CHECK(windows[0].end_s == 4.0);
  }
  SUBCASE("one run in the middle") {
    const auto windows = find_dual_visibility(make({-1, 5, 25, 30, 10}), mask);
    REQUIRE(windows.size() == 1);
    CHECK(windows[0].start_s == 2.0);
    CHECK(windows[0].end_s == 3.0);
  }
  SUBCASE("one station below the mask scuttles the window") {
    auto samples = make({25, 30, 45});
    samples[1].stations[1].elevation_rad = 0.1;
    const auto windows = find_dual_visibility(samples, mask);
    CHECK(windows.empty());  // runs of one sample have no duration
  }
  SUBCASE("windows are disjoint and time ordered") {
    const auto windows =
        find_dual_visibility(make({25, 30, 5, 25, 30, 25, 5, 25, 40}), mask);
    REQUIRE(windows.size() == 3);
    for (std::size_t i = 0; i < windows.size(); ++i) {
      CHECK(windows[i].start_s < windows[i].end_s);
      if (i > 0) CHECK(windows[i].start_s > windows[i - 1].end_s);
    }
  }
}
