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

#pragma once

#include <cstddef>
#include <vector>

namespace qinsim::orbit {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

double norm(const Vec3& v);
double dot(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);

/// Geographic location on the spherical Earth model.
struct GeodeticPoint {
  double latitude_deg = 0.0;   // [-90, 90]
  double longitude_deg = 0.0;  // [-180, 180)
  double altitude_m = 0.0;     // above the sphere
};

/// Rotating spherical Earth.
struct EarthModel {
  double radius_m = 6371000.0;
  double mu_m3_per_s2 = 3.986004418e14;
  double rotation_rate_rad_per_s = 7.2921159e-5;  // sidereal
};

/// Circular orbit. `epoch_s` is the simulation time origin expressed as
/// seconds past the instant when the inertial and earth-fixed frames were
/// aligned; it phases the ground track relative to the stations.
struct OrbitSpec {
  double altitude_m = 600000.0;
  double inclination_deg = 60.0;
  double raan_deg = 72.5;
  double arg_of_latitude_epoch_deg = 0.0;
  double epoch_s = 0.0;
};

struct StationSample {
  double elevation_rad = 0.0;
  double slant_range_m = 0.0;
};

/// One time sample of the satellite geometry as seen from each station.
struct PassSample {
  double time_s = 0.0;
  std::vector<StationSample> stations;
};

/// Closed interval of simultaneous visibility, at sample resolution.
struct VisibilityWindow {
  double start_s = 0.0;
  double end_s = 0.0;
};

/// Mean angular rate n = sqrt(mu / a^3) for the circular orbit.
double mean_motion(const OrbitSpec& spec, const EarthModel& earth);

/// Satellite position in the inertial frame at time t (seconds past epoch).
Vec3 propagate_inertial(const OrbitSpec& spec, const EarthModel& earth, double t);

/// Satellite position in the earth-fixed frame at time t.
/// Throws config_error if the spec is invalid (non-positive altitude).
Vec3 propagate(const OrbitSpec& spec, const EarthModel& earth, double t);

/// Station position in the earth-fixed frame.
Vec3 station_position(const GeodeticPoint& station, const EarthModel& earth);

/// Elevation above the local horizontal plane and line-of-sight distance.
StationSample elevation_and_range(const Vec3& sat_ecef,
                                  const GeodeticPoint& station,
                                  const EarthModel& earth);

/// Sample the pass at t0, t0+dt, ...; floor((t1-t0)/dt)+1 samples.
/// Throws config_error on an empty station list.
std::vector<PassSample> sample_pass(const OrbitSpec& spec,
                                    const EarthModel& earth,
                                    const std::vector<GeodeticPoint>& stations,
                                    double t0, double t1, double dt);

/// Maximal runs of consecutive samples where every station sits at or above
/// the elevation mask. Runs of a single sample have zero duration and are
/// dropped.
std::vector<VisibilityWindow> find_dual_visibility(
    const std::vector<PassSample>& samples, double min_elevation_rad);

} // namespace qinsim::orbit
