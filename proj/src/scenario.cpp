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

#include "scenario.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace qinsim {

namespace {

using RealRef = double& (*)(Scenario&);

struct RealKey {
  KeyInfo info;
  RealRef ref;
};

// All real-valued keys with their valid ranges. Bounds are inclusive.
const RealKey kRealKeys[] = {
    {{"orbit.altitude_m", "satellite altitude above the sphere [m]", KeyKind::real, 1.0, 5e7},
     [](Scenario& s) -> double& { return s.orbit.altitude_m; }},
    {{"orbit.inclination_deg", "orbit inclination [deg]", KeyKind::real, 0.0, 180.0},
     [](Scenario& s) -> double& { return s.orbit.inclination_deg; }},
    {{"orbit.raan_deg", "right ascension of the ascending node [deg]", KeyKind::real, -360.0, 360.0},
     [](Scenario& s) -> double& { return s.orbit.raan_deg; }},
    {{"orbit.arg_of_latitude_deg", "argument of latitude at the simulation origin [deg]", KeyKind::real, -360.0, 360.0},
     [](Scenario& s) -> double& { return s.orbit.arg_of_latitude_epoch_deg; }},
    {{"orbit.epoch_s", "simulation origin, seconds past frame alignment; phases the ground track (start-date analogue) [s]", KeyKind::real, -1e9, 1e9},
     [](Scenario& s) -> double& { return s.orbit.epoch_s; }},
    {{"earth.radius_m", "Earth radius [m]", KeyKind::real, 1e3, 1e9},
     [](Scenario& s) -> double& { return s.earth.radius_m; }},
    {{"earth.mu_m3_s2", "gravitational parameter [m^3/s^2]", KeyKind::real, 1e10, 1e18},
     [](Scenario& s) -> double& { return s.earth.mu_m3_per_s2; }},
    {{"earth.rotation_rate_rad_s", "sidereal rotation rate [rad/s]", KeyKind::real, 0.0, 1.0},
     [](Scenario& s) -> double& { return s.earth.rotation_rate_rad_per_s; }},
    {{"stations.calern.latitude_deg", "MeO station latitude [deg]", KeyKind::real, -90.0, 90.0},
     [](Scenario& s) -> double& { return s.calern.location.latitude_deg; }},
    {{"stations.calern.longitude_deg", "MeO station longitude [deg]", KeyKind::real, -180.0, 180.0},
     [](Scenario& s) -> double& { return s.calern.location.longitude_deg; }},
    {{"stations.calern.altitude_m", "MeO station altitude [m]", KeyKind::real, -500.0, 1e5},
     [](Scenario& s) -> double& { return s.calern.location.altitude_m; }},
    {{"stations.calern.rx_aperture_m", "receive telescope diameter at Calern [m]", KeyKind::real, 1e-3, 100.0},
     [](Scenario& s) -> double& { return s.calern.rx_aperture_m; }},
    {{"stations.calern.rx_internal", "receiver internal transmittance at Calern, fiber coupling included", KeyKind::real, 0.0, 1.0},
     [](Scenario& s) -> double& { return s.calern.rx_internal; }},
    {{"stations.palaiseau.latitude_deg", "Palaiseau station latitude [deg]", KeyKind::real, -90.0, 90.0},
     [](Scenario& s) -> double& { return s.palaiseau.location.latitude_deg; }},
    {{"stations.palaiseau.longitude_deg", "Palaiseau station longitude [deg]", KeyKind::real, -180.0, 180.0},
     [](Scenario& s) -> double& { return s.palaiseau.location.longitude_deg; }},
    {{"stations.palaiseau.altitude_m", "Palaiseau station altitude [m]", KeyKind::real, -500.0, 1e5},
     [](Scenario& s) -> double& { return s.palaiseau.location.altitude_m; }},
    {{"stations.palaiseau.rx_aperture_m", "receive telescope diameter at Palaiseau [m]", KeyKind::real, 1e-3, 100.0},
     [](Scenario& s) -> double& { return s.palaiseau.rx_aperture_m; }},
    {{"stations.palaiseau.rx_internal", "receiver internal transmittance at Palaiseau, fiber coupling included", KeyKind::real, 0.0, 1.0},
     [](Scenario& s) -> double& { return s.palaiseau.rx_internal; }},
    {{"source.wavelength_m", "entangled photon wavelength [m]", KeyKind::real, 1e-9, 1e-3},
     [](Scenario& s) -> double& { return s.source.wavelength_m; }},
    {{"source.efficiency", "pair generation probability per pump slot", KeyKind::real, 0.0, 1.0},
     [](Scenario& s) -> double& { return s.source.pair_efficiency; }},
    {{"source.rate_hz", "source pump rate [pairs/s]", KeyKind::real, 1.0, 1e15},
     [](Scenario& s) -> double& { return s.source.rate_hz; }},
    {{"source.fidelity", "source Bell-state fidelity", KeyKind::real, 0.0, 1.0},
     [](Scenario& s) -> double& { return s.source.fidelity; }},
    {{"converter.efficiency", "wavelength conversion efficiency", KeyKind::real, 0.0, 1.0},
     [](Scenario& s) -> double& { return s.converter.efficiency; }},
    {{"converter.fidelity", "wavelength conversion fidelity", KeyKind::real, 0.0, 1.0},
     [](Scenario& s) -> double& { return s.converter.fidelity; }},
    {{"memory.write_efficiency", "memory write efficiency", KeyKind::real, 0.0, 1.0},
     [](Scenario& s) -> double& { return s.memory.write_efficiency; }},
    {{"memory.fidelity", "memory fidelity", KeyKind::real, 0.0, 1.0},
     [](Scenario& s) -> double& { return s.memory.fidelity; }},
    {{"memory.storage_time_s", "characteristic storage time [s]", KeyKind::real, 1e-12, 1e6},
     [](Scenario& s) -> double& { return s.memory.storage_time_s; }},
    {{"memory.storage_window_s", "storage window, reporting only [s]", KeyKind::real, 0.0, 1.0},
     [](Scenario& s) -> double& { return s.memory.storage_window_s; }},
    {{"detectors.efficiency", "single photon detector efficiency", KeyKind::real, 0.0, 1.0},
     [](Scenario& s) -> double& { return s.detectors.efficiency; }},
    {{"detectors.dark_count_rate_hz", "dark count rate [counts/s]", KeyKind::real, 0.0, 1e12},
     [](Scenario& s) -> double& { return s.detectors.dark_count_rate_hz; }},
    {{"bsm.efficiency", "Bell state measurement efficiency, at most 1/2", KeyKind::real, 0.0, 0.5},
     [](Scenario& s) -> double& { return s.bsm.efficiency; }},
    {{"fiber.attenuation_db_per_km", "fiber attenuation [dB/km]", KeyKind::real, 0.0, 100.0},
     [](Scenario& s) -> double& { return s.fiber_attenuation_db_per_km; }},
    {{"fiber.fidelity", "fiber polarization fidelity", KeyKind::real, 0.0, 1.0},
     [](Scenario& s) -> double& { return s.fiber_fidelity; }},
    {{"links.paris.fiber1_km", "Paris link, source to Alice-side node [km]", KeyKind::real, 0.0, 1e4},
     [](Scenario& s) -> double& { return s.paris_fiber1_km; }},
    {{"links.paris.fiber2_km", "Paris link, source to Palaiseau [km]", KeyKind::real, 0.0, 1e4},
     [](Scenario& s) -> double& { return s.paris_fiber2_km; }},
    {{"links.nice.fiber1_km", "Nice link, source to Calern [km]", KeyKind::real, 0.0, 1e4},
     [](Scenario& s) -> double& { return s.nice_fiber1_km; }},
    {{"links.nice.fiber2_km", "Nice link, source to Bob-side node [km]", KeyKind::real, 0.0, 1e4},
     [](Scenario& s) -> double& { return s.nice_fiber2_km; }},
    {{"spacelink.tx_aperture_m", "transmit telescope diameter on board [m]", KeyKind::real, 1e-3, 100.0},
     [](Scenario& s) -> double& { return s.tx_aperture_m; }},
    {{"spacelink.tx_internal", "transmit telescope internal transmittance", KeyKind::real, 0.0, 1.0},
     [](Scenario& s) -> double& { return s.tx_internal; }},
    {{"spacelink.zenith_transmittance", "atmospheric transmittance at zenith", KeyKind::real, 0.0, 1.0},
     [](Scenario& s) -> double& { return s.zenith_transmittance; }},
    {{"spacelink.fidelity", "free-space polarization fidelity", KeyKind::real, 0.0, 1.0},
     [](Scenario& s) -> double& { return s.freespace_fidelity; }},
    {{"sim.t0_s", "series start time [s]", KeyKind::real, -1e9, 1e9},
     [](Scenario& s) -> double& { return s.t0_s; }},
    {{"sim.t1_s", "series end time [s]", KeyKind::real, -1e9, 1e9},
     [](Scenario& s) -> double& { return s.t1_s; }},
    {{"sim.dt_s", "sampling step [s]", KeyKind::real, 1e-6, 1e6},
     [](Scenario& s) -> double& { return s.dt_s; }},
    {{"sim.min_elevation_deg", "visibility mask [deg]", KeyKind::real, 0.0, 90.0},
     [](Scenario& s) -> double& { return s.min_elevation_deg; }},
    {{"sim.timeslot_s", "timeslot duration, nominally 1/source.rate_hz [s]", KeyKind::real, 1e-15, 1.0},
     [](Scenario& s) -> double& { return s.timeslot_s; }},
};

const KeyInfo kModesKey = {"memory.modes", "memory storage modes per swap window",
                           KeyKind::integer, 1.0, 1e7};
const KeyInfo kSeedKey = {"sim.seed", "random seed for stochastic runs",
                          KeyKind::unsigned64, 0.0, 0.0};
const KeyInfo kStrictKey = {"sim.strict_eq1",
                            "keep the rate factor in the user interface term",
                            KeyKind::boolean, 0.0, 0.0};
const KeyInfo kWindowModeKey = {"sim.sat_window_mode",
                                "aggregate the space link over the swap window",
                                KeyKind::boolean, 0.0, 0.0};
const KeyInfo kStraylightKey = {"straylight.levels_hz",
                                "comma-separated straylight levels [counts/s]",
                                KeyKind::real_list, 0.0, 1e15};

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_real(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (v.empty() || end != v.c_str() + v.size() || !std::isfinite(x))
    throw config_error(key + ": cannot parse '" + value + "' as a number");
  return x;
}

void check_range(const KeyInfo& info, double x) {
  if (x < info.lo || x > info.hi) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s: value %g out of range [%g, %g]", info.key, x,
                  info.lo, info.hi);
    throw config_error(buf);
  }
}

const RealKey* find_real_key(const std::string& key) {
  for (const RealKey& k : kRealKeys)
    if (key == k.info.key) return &k;
  return nullptr;
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

} // namespace

const std::vector<KeyInfo>& schema() {
  static const std::vector<KeyInfo> keys = [] {
    std::vector<KeyInfo> v;
    for (const RealKey& k : kRealKeys) v.push_back(k.info);
    v.push_back(kModesKey);
    v.push_back(kStraylightKey);
    v.push_back(kSeedKey);
    v.push_back(kStrictKey);
    v.push_back(kWindowModeKey);
    return v;
  }();
  return keys;
}

Scenario default_scenario() {
  Scenario s;
  // Orbit phasing: culmination between the two stations near t = 300 s, so
  // the dual-visibility window sits inside the default [0, 600] s series.
  s.orbit.arg_of_latitude_epoch_deg = 37.85;
  s.orbit.epoch_s = 24832.0;
  s.calern = {"calern", {43.754, 6.921, 1270.0}, 1.5, 0.1};
  s.palaiseau = {"palaiseau", {48.713, 2.208, 160.0}, 1.0, 0.1};
  return s;
}

void set_key(Scenario& s, const std::string& key, const std::string& value) {
  if (const RealKey* k = find_real_key(key)) {
    const double x = parse_real(key, value);
    check_range(k->info, x);
    k->ref(s) = x;
    return;
  }
  if (key == kModesKey.key) {
    const double x = parse_real(key, value);
    check_range(kModesKey, x);
    if (x != std::floor(x))
      throw config_error(key + ": expected an integer, got '" + value + "'");
    s.memory.modes = static_cast<int>(x);
    return;
  }
  if (key == kSeedKey.key) {
    const std::string v = trim(value);
    char* end = nullptr;
    const unsigned long long x = std::strtoull(v.c_str(), &end, 10);
    if (v.empty() || !std::isdigit(static_cast<unsigned char>(v[0])) ||
        end != v.c_str() + v.size())
      throw config_error(key + ": cannot parse '" + value + "' as an unsigned integer");
    s.seed = x;
    return;
  }
  if (key == kStrictKey.key || key == kWindowModeKey.key) {
    const std::string v = trim(value);
    bool* target = (key == kStrictKey.key) ? &s.strict_eq1 : &s.sat_window_mode;
    if (v == "true" || v == "1")
      *target = true;
    else if (v == "false" || v == "0")
      *target = false;
    else
      throw config_error(key + ": expected true/false, got '" + value + "'");
    return;
  }
  if (key == kStraylightKey.key) {
    std::vector<double> levels;
    std::stringstream parts(value);
    std::string item;
    while (std::getline(parts, item, ',')) {
      const double x = parse_real(key, item);
      check_range(kStraylightKey, x);
      levels.push_back(x);
    }
    if (levels.empty())
      throw config_error(key + ": expected at least one level");
    s.straylight_levels_hz = std::move(levels);
    return;
  }
  throw config_error("unknown key '" + key + "'");
}

std::string get_key(const Scenario& s, const std::string& key) {
  if (const RealKey* k = find_real_key(key))
    return format_real(k->ref(const_cast<Scenario&>(s)));
  if (key == kModesKey.key) return std::to_string(s.memory.modes);
  if (key == kSeedKey.key) return std::to_string(s.seed);
  if (key == kStrictKey.key) return s.strict_eq1 ? "true" : "false";
  if (key == kWindowModeKey.key) return s.sat_window_mode ? "true" : "false";
  if (key == kStraylightKey.key) {
    std::string out;
    for (std::size_t i = 0; i < s.straylight_levels_hz.size(); ++i) {
      if (i) out += ",";
      out += format_real(s.straylight_levels_hz[i]);
    }
    return out;
  }
  throw config_error("unknown key '" + key + "'");
}

void validate(const Scenario& s) {
  if (!(s.t0_s < s.t1_s))
    throw config_error("sim.t0_s: must be smaller than sim.t1_s");
  if (s.straylight_levels_hz.empty())
    throw config_error("straylight.levels_hz: expected at least one level");
  for (std::size_t i = 0; i < s.straylight_levels_hz.size(); ++i)
    for (std::size_t j = i + 1; j < s.straylight_levels_hz.size(); ++j)
      if (s.straylight_levels_hz[i] == s.straylight_levels_hz[j])
        throw config_error("straylight.levels_hz: duplicate level " +
                           format_real(s.straylight_levels_hz[i]));
}

Scenario parse_scenario(const std::string& text) {
  Scenario s = default_scenario();
  std::stringstream lines(text);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw config_error("line " + std::to_string(line_no) +
                         ": expected 'key = value', got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      set_key(s, key, value);
    } catch (const config_error& e) {
      throw config_error("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  validate(s);
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw config_error("cannot open scenario file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

} // namespace qinsim
