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

#include <cstdint>
#include <string>
#include <vector>

#include "devices.hpp"
#include "orbit.hpp"

namespace qinsim {

struct StationConfig {
  std::string name;
  orbit::GeodeticPoint location;
  double rx_aperture_m = 1.0;
  double rx_internal = 0.1;
};

/// Full description of one simulation run. Defaults reproduce the reference
/// Paris-Nice scenario; every key can be overridden from the line-oriented
/// `key = value` config format (see schema()).
struct Scenario {
  orbit::OrbitSpec orbit;
  orbit::EarthModel earth;
  StationConfig calern;
  StationConfig palaiseau;

  devices::SourceModel source;
  devices::ConverterModel converter;
  devices::MemoryModel memory;
  devices::DetectorModel detectors;
  devices::BsmModel bsm;

  double fiber_attenuation_db_per_km = 0.2;
  double fiber_fidelity = 0.99;

  double tx_aperture_m = 0.4;
  double tx_internal = 0.7;
  double zenith_transmittance = 0.2;
  double freespace_fidelity = 0.99;

  double paris_fiber1_km = 14.0;
  double paris_fiber2_km = 45.0;
  double nice_fiber1_km = 32.0;
  double nice_fiber2_km = 35.0;

  std::vector<double> straylight_levels_hz = {0.0, 1e3, 1e5};

  double t0_s = 0.0;
  double t1_s = 600.0;
  double dt_s = 1.0;
  double min_elevation_deg = 20.0;
  double timeslot_s = 1e-9;
  std::uint64_t seed = 20260801;
  bool strict_eq1 = false;
  bool sat_window_mode = false;
};

enum class KeyKind { real, integer, unsigned64, boolean, real_list };

struct KeyInfo {
  const char* key;
  const char* doc;  // includes units
  KeyKind kind;
  double lo;
  double hi;
};

/// The documented config schema: one entry per accepted key.
const std::vector<KeyInfo>& schema();

Scenario default_scenario();

/// Parse config text over the defaults. Unknown keys, malformed lines, and
/// out-of-range values raise config_error naming the key.
Scenario parse_scenario(const std::string& text);

/// Load and parse a config file. Missing file raises config_error.
Scenario load_scenario(const std::string& path);

/// Set one key from its textual value, with the same validation as parsing.
void set_key(Scenario& s, const std::string& key, const std::string& value);

/// Current value of a key, formatted so set_key(get_key()) round-trips.
std::string get_key(const Scenario& s, const std::string& key);

/// Cross-field checks (e.g. t0 < t1). parse/load run this automatically.
void validate(const Scenario& s);

} // namespace qinsim
