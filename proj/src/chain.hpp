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
#include <vector>

#include "devices.hpp"

namespace qinsim::chain {

/// One source, two propagation channels, two heralded memories. Channel
/// efficiencies are per-photon survival probabilities; for the space link
/// they vary with the pass geometry and are set per time sample.
struct ElementaryLink {
  devices::SourceModel source;
  double channel1_efficiency = 1.0;
  double channel2_efficiency = 1.0;
  devices::MemoryModel memory_left;
  devices::MemoryModel memory_right;
  double medium_fidelity = 0.99;  // fiber or free-space polarization fidelity
  bool is_space = false;
};

/// End-user ion-photon interface: wavelength converter plus one memory.
struct UserInterface {
  devices::ConverterModel converter;
  devices::MemoryModel memory;
};

/// Swap node: BSM plus its detector pair. Space-facing nodes collect
/// straylight background in addition to dark counts.
struct BsmNode {
  devices::BsmModel bsm;
  devices::DetectorModel detector;
  bool space_facing = false;
};

/// Alice interface - BSM - link - BSM - ... - link - BSM - Bob interface.
/// bsm_nodes.size() == links.size() + 1.
struct ChainTopology {
  UserInterface alice;
  UserInterface bob;
  std::vector<ElementaryLink> links;
  std::vector<BsmNode> bsm_nodes;
  std::size_t space_link_index = 0;
};

struct ChainControls {
  int modes = 500;           // memory slots N per swap window
  double timeslot_s = 1e-9;  // 1 / R_src
  bool strict_eq1 = false;   // keep the rate factor in the user interface term
  bool sat_window_mode = false;  // aggregate the space link over the window
  double straylight_rate_hz = 0.0;
};

/// Probability of at least one stored pair over a window of `modes`
/// timeslots (slot k stored for k*timeslot_s before readout).
double elementary_link_efficiency(const ElementaryLink& link, int modes,
                                  double timeslot_s);

/// Per-attempt success probability of the link, memories evaluated at the
/// worst slot of the window. Used for the space link unless window
/// aggregation is enabled.
double space_elementary_efficiency(const ElementaryLink& link, int modes,
                                   double timeslot_s);

/// Delivered end-to-end pair rate for one swap window, links' channel
/// efficiencies already resolved. `space_visible` false forces the space
/// link down.
double end_to_end_rate(const ChainTopology& topo, const ChainControls& ctl,
                       bool space_visible);

/// End-to-end Werner parameter: per-link medium factors and per-node noise
/// factors with window-aggregated link efficiencies.
devices::WernerState end_to_end_werner(const ChainTopology& topo,
                                       const ChainControls& ctl,
                                       bool space_visible);

/// Satellite pass geometry reduced to what the chain needs at one sample.
struct SpaceGeometry {
  double time_s = 0.0;
  double elevation_a_rad = 0.0;
  double elevation_b_rad = 0.0;
  double path_efficiency_a = 0.0;  // single-path budgets, 0 when link down
  double path_efficiency_b = 0.0;
  bool visible = false;
};

/// One record of the output time series.
struct SeriesSample {
  double time_s = 0.0;
  double elevation_a_rad = 0.0;
  double elevation_b_rad = 0.0;
  double path_efficiency_a = 0.0;
  double path_efficiency_b = 0.0;
  double sigma_sat = 0.0;       // pairs/s delivered by the space link
  double sigma_end = 0.0;       // pairs/s delivered end to end
  double cum_sat = 0.0;         // trapezoidal integrals of the above
  double cum_end = 0.0;
  double werner_end = 0.0;
  double fidelity_end = 0.25;
};

/// Evaluate the chain at every geometry sample (cumulative fields filled by
/// cumulate()).
std::vector<SeriesSample> simulate_pass(const ChainTopology& topo,
                                        const ChainControls& ctl,
                                        const std::vector<SpaceGeometry>& geometry);

/// Fill cum_sat / cum_end with the trapezoidal integral over time.
void cumulate(std::vector<SeriesSample>& series);

struct MonteCarloResult {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
};

/// Stochastic estimate of elementary_link_efficiency: per trial, draw each
/// slot independently and count windows with at least one success. The
/// random stream is split per trial, so the result is independent of
/// evaluation order.
MonteCarloResult monte_carlo_elementary(const ElementaryLink& link, int modes,
                                        double timeslot_s, std::uint64_t trials,
                                        std::uint64_t seed);

} // namespace qinsim::chain
