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

#include <string>
#include <vector>

#include "chain.hpp"
#include "scenario.hpp"
#include "teleport.hpp"

namespace qinsim {

/// Pass geometry for the two-station scenario: raw samples, the chain-level
/// reduction, and the dual-visibility windows.
struct PassGeometry {
  std::vector<orbit::PassSample> samples;  // stations: [calern, palaiseau]
  std::vector<chain::SpaceGeometry> space;
  std::vector<orbit::VisibilityWindow> windows;
  orbit::VisibilityWindow main_window;  // longest window, valid when has_window
  bool has_window = false;
};

PassGeometry compute_pass(const Scenario& s);

/// The reference chain: Alice interface - Alice BSM - Paris fibers - TRT
/// BSM - space link - Calern BSM - Nice fibers - Bob BSM - Bob interface.
chain::ChainTopology build_topology(const Scenario& s);

chain::ChainControls build_controls(const Scenario& s, double straylight_hz);

struct StraylightSeries {
  double straylight_hz = 0.0;
  std::vector<chain::SeriesSample> samples;
};

struct FidelityStats {
  double straylight_hz = 0.0;
  double peak = 0.25;
  double floor_in_window = 0.25;
  double edge_first = 0.25;
  double edge_last = 0.25;
};

struct RunSummary {
  std::uint64_t seed = 0;
  std::size_t window_count = 0;
  double window_start_s = 0.0;
  double window_end_s = 0.0;
  double duration_s = 0.0;
  double peak_sigma_sat = 0.0;
  double peak_time_s = 0.0;
  double cum_sat = 0.0;
  double cum_end = 0.0;
  double end_to_ground_ratio = 0.0;
  double cum_end_alt_mode = 0.0;  // the other space-link aggregation mode
  std::vector<FidelityStats> fidelity;
  teleport::GateBudget budget;
};

struct SimulationResult {
  PassGeometry geometry;
  std::vector<StraylightSeries> series;
  RunSummary summary;
};

/// Full run over all configured straylight levels.
/// Throws geometry_error (with a diagnostic report) when the pass never has
/// both stations above the mask.
SimulationResult run_simulation(const Scenario& s);

/// Human-readable description of the pass, also used as the exit-2
/// diagnostic.
std::string geometry_report(const Scenario& s, const PassGeometry& g);

std::string series_csv(const StraylightSeries& series);
std::string pass_csv(const PassGeometry& g);
std::string summary_text(const RunSummary& summary);

/// File tag for one straylight level ("0", "1000", ...).
std::string straylight_tag(double level_hz);

/// Write series_straylight_<tag>.csv per level plus summary.txt.
void write_simulation_outputs(const SimulationResult& result, const std::string& out_dir);

/// Write pass.csv for the geometry-only subcommand.
void write_pass_outputs(const PassGeometry& g, const std::string& out_dir);

} // namespace qinsim
