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

#include "chain.hpp"

#include <cmath>

namespace qinsim::chain {

namespace {

double slot_success_probability(const ElementaryLink& link, double storage_s) {
  return link.source.pair_efficiency * link.channel1_efficiency *
         link.channel2_efficiency *
         devices::memory_efficiency(link.memory_left, storage_s) *
         devices::memory_efficiency(link.memory_right, storage_s);
}

/// User-interface efficiency entering the end-to-end product: conversion and
/// the memory read at the end of the swap window.
double user_interface_efficiency(const UserInterface& user, const ChainControls& ctl) {
  return user.converter.efficiency *
         devices::memory_efficiency(user.memory, ctl.modes * ctl.timeslot_s);
}

double link_window_efficiency(const ChainTopology& topo, const ChainControls& ctl,
                              std::size_t index, bool space_visible) {
  const ElementaryLink& link = topo.links[index];
  if (link.is_space && !space_visible) return 0.0;
  return elementary_link_efficiency(link, ctl.modes, ctl.timeslot_s);
}

/// Noise factor of one Bell measurement: probability that a click on each
/// adjacent link came from the source. A dead link with no background at all
/// produces no heralds; its factor is zero.
double click_purity(double eta, double rate_hz, double false_rate_hz) {
  if (eta <= 0.0 && false_rate_hz <= 0.0) return 0.0;
  return devices::true_click_probability(rate_hz * eta, false_rate_hz);
}

} // namespace

double elementary_link_efficiency(const ElementaryLink& link, int modes,
                                  double timeslot_s) {
  double log_fail = 0.0;
  for (int k = 1; k <= modes; ++k) {
    const double p = slot_success_probability(link, k * timeslot_s);
    log_fail += std::log1p(-p);
  }
  return -std::expm1(log_fail);
}

double space_elementary_efficiency(const ElementaryLink& link, int modes,
                                   double timeslot_s) {
  return slot_success_probability(link, modes * timeslot_s);
}

double end_to_end_rate(const ChainTopology& topo, const ChainControls& ctl,
                       bool space_visible) {
  const double rate_hz = topo.links.front().source.rate_hz;
  double product = user_interface_efficiency(topo.alice, ctl) *
                   user_interface_efficiency(topo.bob, ctl);
  if (ctl.strict_eq1) product *= rate_hz * rate_hz;

  for (const BsmNode& node : topo.bsm_nodes)
    product *= devices::swap_efficiency(node.bsm, node.detector);

  for (std::size_t i = 0; i < topo.links.size(); ++i) {
    const ElementaryLink& link = topo.links[i];
    if (link.is_space) {
      if (!space_visible) return 0.0;
      product *= ctl.sat_window_mode
                     ? elementary_link_efficiency(link, ctl.modes, ctl.timeslot_s)
                     : space_elementary_efficiency(link, ctl.modes, ctl.timeslot_s);
    } else {
      product *= elementary_link_efficiency(link, ctl.modes, ctl.timeslot_s);
    }
  }
  return rate_hz / ctl.modes * product;
}

devices::WernerState end_to_end_werner(const ChainTopology& topo,
                                       const ChainControls& ctl,
                                       bool space_visible) {
  const double rate_hz = topo.links.front().source.rate_hz;

  // Medium factors: the two user sources plus one factor per elementary link.
  double w = devices::source_werner_with_conversion(topo.links.front().source,
                                                    topo.alice.converter).value() *
             devices::source_werner_with_conversion(topo.links.back().source,
                                                    topo.bob.converter).value();
  for (const ElementaryLink& link : topo.links) {
    w *= link.source.fidelity * link.medium_fidelity * link.medium_fidelity *
         link.memory_left.fidelity * link.memory_right.fidelity;
  }

  // Node factors. Each node sees the window-aggregated efficiency of its two
  // neighbours; the end users' ion-photon interface plays the role of the
  // outermost "link".
  const double eta_alice = user_interface_efficiency(topo.alice, ctl);
  const double eta_bob = user_interface_efficiency(topo.bob, ctl);
  for (std::size_t n = 0; n < topo.bsm_nodes.size(); ++n) {
    const BsmNode& node = topo.bsm_nodes[n];
    const double false_rate =
        node.detector.dark_count_rate_hz + node.detector.straylight_rate_hz +
        (node.space_facing ? ctl.straylight_rate_hz : 0.0);
    const double eta_left =
        (n == 0) ? eta_alice : link_window_efficiency(topo, ctl, n - 1, space_visible);
    const double eta_right = (n == topo.links.size())
                                 ? eta_bob
                                 : link_window_efficiency(topo, ctl, n, space_visible);
    w *= click_purity(eta_left, rate_hz, false_rate) *
         click_purity(eta_right, rate_hz, false_rate);
  }
  return devices::WernerState(w);
}

std::vector<SeriesSample> simulate_pass(const ChainTopology& topo,
                                        const ChainControls& ctl,
                                        const std::vector<SpaceGeometry>& geometry) {
  std::vector<SeriesSample> series;
  series.reserve(geometry.size());

  ChainTopology state = topo;  // space-link channel efficiencies mutate per sample
  ElementaryLink& space = state.links[state.space_link_index];
  const double rate_hz = state.links.front().source.rate_hz;

  for (const SpaceGeometry& g : geometry) {
    space.channel1_efficiency = g.visible ? g.path_efficiency_a : 0.0;
    space.channel2_efficiency = g.visible ? g.path_efficiency_b : 0.0;

    SeriesSample s;
    s.time_s = g.time_s;
    s.elevation_a_rad = g.elevation_a_rad;
    s.elevation_b_rad = g.elevation_b_rad;
    s.path_efficiency_a = g.path_efficiency_a;
    s.path_efficiency_b = g.path_efficiency_b;
    s.sigma_sat =
        g.visible ? rate_hz * space_elementary_efficiency(space, ctl.modes, ctl.timeslot_s)
                  : 0.0;
    s.sigma_end = end_to_end_rate(state, ctl, g.visible);
    const devices::WernerState w = end_to_end_werner(state, ctl, g.visible);
    s.werner_end = w.value();
    s.fidelity_end = devices::fidelity_from_werner(w);
    series.push_back(s);
  }
  cumulate(series);
  return series;
}

void cumulate(std::vector<SeriesSample>& series) {
  if (series.empty()) return;
  series.front().cum_sat = 0.0;
  series.front().cum_end = 0.0;
  for (std::size_t i = 1; i < series.size(); ++i) {
    const double dt = series[i].time_s - series[i - 1].time_s;
    series[i].cum_sat = series[i - 1].cum_sat +
                        0.5 * (series[i - 1].sigma_sat + series[i].sigma_sat) * dt;
    series[i].cum_end = series[i - 1].cum_end +
                        0.5 * (series[i - 1].sigma_end + series[i].sigma_end) * dt;
  }
}

namespace {

// splitmix64: one independent, freely seekable stream per trial.
std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform01(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

} // namespace

MonteCarloResult monte_carlo_elementary(const ElementaryLink& link, int modes,
                                        double timeslot_s, std::uint64_t trials,
                                        std::uint64_t seed) {
  std::vector<double> slot_p(static_cast<std::size_t>(modes));
  for (int k = 1; k <= modes; ++k)
    slot_p[static_cast<std::size_t>(k - 1)] =
        slot_success_probability(link, k * timeslot_s);

  std::uint64_t successes = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    // Hash (seed, trial) into the stream state so trial sequences do not
    // overlap as shifted copies of one another.
    std::uint64_t derive = seed + 0x9e3779b97f4a7c15ULL * (t + 1);
    std::uint64_t stream = splitmix64(derive);
    for (double p : slot_p) {
      if (uniform01(stream) < p) {
        ++successes;
        break;
      }
    }
  }

  MonteCarloResult result;
  result.successes = successes;
  result.trials = trials;
  result.estimate = static_cast<double>(successes) / static_cast<double>(trials);
  result.std_error =
      std::sqrt(result.estimate * (1.0 - result.estimate) / static_cast<double>(trials));
  return result;
}

} // namespace qinsim::chain
