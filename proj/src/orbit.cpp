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

#include "orbit.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace qinsim::orbit {

namespace {
constexpr double kDegToRad = M_PI / 180.0;
}

double norm(const Vec3& v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }

double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

double mean_motion(const OrbitSpec& spec, const EarthModel& earth) {
  const double a = earth.radius_m + spec.altitude_m;
  return std::sqrt(earth.mu_m3_per_s2 / (a * a * a));
}

Vec3 propagate_inertial(const OrbitSpec& spec, const EarthModel& earth, double t) {
  if (!(spec.altitude_m > 0.0))
    throw config_error("orbit.altitude_m must be positive");
  const double a = earth.radius_m + spec.altitude_m;
  const double u = spec.arg_of_latitude_epoch_deg * kDegToRad + mean_motion(spec, earth) * t;
  const double inc = spec.inclination_deg * kDegToRad;
  const double raan = spec.raan_deg * kDegToRad;

  const double xo = a * std::cos(u);
  const double yo = a * std::sin(u);
  return {xo * std::cos(raan) - yo * std::cos(inc) * std::sin(raan),
          xo * std::sin(raan) + yo * std::cos(inc) * std::cos(raan),
          yo * std::sin(inc)};
}

Vec3 propagate(const OrbitSpec& spec, const EarthModel& earth, double t) {
  const Vec3 eci = propagate_inertial(spec, earth, t);
  const double theta = earth.rotation_rate_rad_per_s * (spec.epoch_s + t);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c * eci.x + s * eci.y, -s * eci.x + c * eci.y, eci.z};
}

Vec3 station_position(const GeodeticPoint& station, const EarthModel& earth) {
  const double lat = station.latitude_deg * kDegToRad;
  const double lon = station.longitude_deg * kDegToRad;
  const double r = earth.radius_m + station.altitude_m;
  return {r * std::cos(lat) * std::cos(lon), r * std::cos(lat) * std::sin(lon),
          r * std::sin(lat)};
}

StationSample elevation_and_range(const Vec3& sat_ecef,
                                  const GeodeticPoint& station,
                                  const EarthModel& earth) {
  const Vec3 stn = station_position(station, earth);
  const Vec3 d = sat_ecef - stn;
  const double range = norm(d);
  const double up = dot(d, stn) / (range * norm(stn));
  return {std::asin(std::clamp(up, -1.0, 1.0)), range};
}

std::vector<PassSample> sample_pass(const OrbitSpec& spec,
                                    const EarthModel& earth,
                                    const std::vector<GeodeticPoint>& stations,
                                    double t0, double t1, double dt) {
  if (stations.empty())
    throw config_error("sample_pass requires at least one station");
  if (!(t0 < t1) || !(dt > 0.0))
    throw config_error("sample_pass requires t0 < t1 and dt > 0");

  const auto count = static_cast<std::size_t>(std::floor((t1 - t0) / dt + 1e-9)) + 1;
  std::vector<PassSample> samples;
  samples.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    PassSample sample;
    sample.time_s = t0 + static_cast<double>(i) * dt;
    const Vec3 sat = propagate(spec, earth, sample.time_s);
    sample.stations.reserve(stations.size());
    for (const auto& station : stations)
      sample.stations.push_back(elevation_and_range(sat, station, earth));
    samples.push_back(std::move(sample));
  }
  return samples;
}

std::vector<VisibilityWindow> find_dual_visibility(
    const std::vector<PassSample>& samples, double min_elevation_rad) {
  auto all_visible = [min_elevation_rad](const PassSample& s) {
    return std::all_of(s.stations.begin(), s.stations.end(),
                       [min_elevation_rad](const StationSample& st) {
                         return st.elevation_rad >= min_elevation_rad;
                       });
  };

  std::vector<VisibilityWindow> windows;
  std::size_t i = 0;
  while (i < samples.size()) {
    if (!all_visible(samples[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < samples.size() && all_visible(samples[j + 1])) ++j;
    if (j > i)
      windows.push_back({samples[i].time_s, samples[j].time_s});
    i = j + 1;
  }
  return windows;
}

} // namespace qinsim::orbit
