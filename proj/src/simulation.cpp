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

#include "simulation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "channel.hpp"
#include "errors.hpp"

namespace qinsim {

namespace {

constexpr double kDegToRad = M_PI / 180.0;

channel::FreeSpaceParams station_path_params(const Scenario& s,
                                             const StationConfig& station) {
  channel::FreeSpaceParams p;
  p.wavelength_m = s.source.wavelength_m;
  p.tx_aperture_m = s.tx_aperture_m;
  p.rx_aperture_m = station.rx_aperture_m;
  p.tx_internal = s.tx_internal;
  p.rx_internal = station.rx_internal;
  p.zenith_transmittance = s.zenith_transmittance;
  return p;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write '" + path.string() + "'");
  out << content;
}

} // namespace

PassGeometry compute_pass(const Scenario& s) {
  PassGeometry g;
  const std::vector<orbit::GeodeticPoint> stations = {s.calern.location,
                                                      s.palaiseau.location};
  g.samples = orbit::sample_pass(s.orbit, s.earth, stations, s.t0_s, s.t1_s, s.dt_s);
  const double mask = s.min_elevation_deg * kDegToRad;
  g.windows = orbit::find_dual_visibility(g.samples, mask);
  if (!g.windows.empty()) {
    g.has_window = true;
    g.main_window = *std::max_element(
        g.windows.begin(), g.windows.end(),
        [](const orbit::VisibilityWindow& a, const orbit::VisibilityWindow& b) {
          return (a.end_s - a.start_s) < (b.end_s - b.start_s);
        });
  }

  const channel::FreeSpaceParams calern_path = station_path_params(s, s.calern);
  const channel::FreeSpaceParams palaiseau_path = station_path_params(s, s.palaiseau);
  g.space.reserve(g.samples.size());
  for (const orbit::PassSample& sample : g.samples) {
    chain::SpaceGeometry geo;
    geo.time_s = sample.time_s;
    geo.elevation_a_rad = sample.stations[0].elevation_rad;
    geo.elevation_b_rad = sample.stations[1].elevation_rad;
    if (geo.elevation_a_rad > 0.0)
      geo.path_efficiency_a = channel::single_path_efficiency(
          calern_path, sample.stations[0].slant_range_m, geo.elevation_a_rad);
    if (geo.elevation_b_rad > 0.0)
      geo.path_efficiency_b = channel::single_path_efficiency(
          palaiseau_path, sample.stations[1].slant_range_m, geo.elevation_b_rad);
    geo.visible = geo.elevation_a_rad >= mask && geo.elevation_b_rad >= mask;
    g.space.push_back(geo);
  }
  return g;
}

chain::ChainTopology build_topology(const Scenario& s) {
  chain::ChainTopology topo;
  topo.alice = {s.converter, s.memory};
  topo.bob = {s.converter, s.memory};

  auto fiber = [&s](double km) {
    return channel::fiber_efficiency({km, s.fiber_attenuation_db_per_km});
  };
  chain::ElementaryLink paris{s.source, fiber(s.paris_fiber1_km),
                              fiber(s.paris_fiber2_km), s.memory, s.memory,
                              s.fiber_fidelity, false};
  chain::ElementaryLink space{s.source, 0.0, 0.0, s.memory, s.memory,
                              s.freespace_fidelity, true};
  chain::ElementaryLink nice{s.source, fiber(s.nice_fiber1_km),
                             fiber(s.nice_fiber2_km), s.memory, s.memory,
                             s.fiber_fidelity, false};
  topo.links = {paris, space, nice};
  topo.space_link_index = 1;

  chain::BsmNode ground{s.bsm, s.detectors, false};
  chain::BsmNode space_facing{s.bsm, s.detectors, true};
  // Alice BSM, TRT, Calern, Bob BSM; straylight couples in at the two
  // telescope sites.
  topo.bsm_nodes = {ground, space_facing, space_facing, ground};
  return topo;
}

chain::ChainControls build_controls(const Scenario& s, double straylight_hz) {
  chain::ChainControls ctl;
  ctl.modes = s.memory.modes;
  ctl.timeslot_s = s.timeslot_s;
  ctl.strict_eq1 = s.strict_eq1;
  ctl.sat_window_mode = s.sat_window_mode;
  ctl.straylight_rate_hz = straylight_hz;
  return ctl;
}

std::string geometry_report(const Scenario& s, const PassGeometry& g) {
  double max_cal = -M_PI / 2, max_pal = -M_PI / 2, max_joint = -M_PI / 2;
  for (const chain::SpaceGeometry& geo : g.space) {
    max_cal = std::max(max_cal, geo.elevation_a_rad);
    max_pal = std::max(max_pal, geo.elevation_b_rad);
    max_joint = std::max(max_joint, std::min(geo.elevation_a_rad, geo.elevation_b_rad));
  }
  std::string out;
  out += "samples = " + std::to_string(g.samples.size()) + "\n";
  out += "mask_deg = " + fmt(s.min_elevation_deg) + "\n";
  out += "max_elevation_calern_deg = " + fmt(max_cal / kDegToRad) + "\n";
  out += "max_elevation_palaiseau_deg = " + fmt(max_pal / kDegToRad) + "\n";
  out += "max_joint_elevation_deg = " + fmt(max_joint / kDegToRad) + "\n";
  out += "window_count = " + std::to_string(g.windows.size()) + "\n";
  for (std::size_t i = 0; i < g.windows.size(); ++i) {
    out += "window_" + std::to_string(i) + " = [" + fmt(g.windows[i].start_s) + ", " +
           fmt(g.windows[i].end_s) + "] s\n";
  }
  if (!g.has_window)
    out += "no dual-visibility window: both stations never clear the mask together\n";
  return out;
}

SimulationResult run_simulation(const Scenario& s) {
  SimulationResult result;
  result.geometry = compute_pass(s);
  if (!result.geometry.has_window)
    throw geometry_error("no dual-visibility window found\n" +
                         geometry_report(s, result.geometry));

  const chain::ChainTopology topo = build_topology(s);
  for (double level : s.straylight_levels_hz) {
    StraylightSeries series;
    series.straylight_hz = level;
    series.samples =
        chain::simulate_pass(topo, build_controls(s, level), result.geometry.space);
    result.series.push_back(std::move(series));
  }

  // Summary. Rates do not depend on the straylight level; use the first
  // series for them.
  RunSummary& sum = result.summary;
  sum.seed = s.seed;
  sum.window_count = result.geometry.windows.size();
  sum.window_start_s = result.geometry.main_window.start_s;
  sum.window_end_s = result.geometry.main_window.end_s;
  sum.duration_s = sum.window_end_s - sum.window_start_s;

  const std::vector<chain::SeriesSample>& base = result.series.front().samples;
  for (const chain::SeriesSample& sample : base) {
    if (sample.sigma_sat > sum.peak_sigma_sat) {
      sum.peak_sigma_sat = sample.sigma_sat;
      sum.peak_time_s = sample.time_s;
    }
  }
  sum.cum_sat = base.back().cum_sat;
  sum.cum_end = base.back().cum_end;
  sum.end_to_ground_ratio = sum.cum_sat > 0.0 ? sum.cum_end / sum.cum_sat : 0.0;
  sum.budget = teleport::gate_budget(
      static_cast<std::uint64_t>(std::floor(sum.cum_end)));

  // The same run under the other space-link aggregation, for comparison.
  {
    Scenario alt = s;
    alt.sat_window_mode = !s.sat_window_mode;
    const auto alt_series = chain::simulate_pass(
        topo, build_controls(alt, s.straylight_levels_hz.front()),
        result.geometry.space);
    sum.cum_end_alt_mode = alt_series.back().cum_end;
  }

  for (const StraylightSeries& series : result.series) {
    FidelityStats stats;
    stats.straylight_hz = series.straylight_hz;
    stats.peak = 0.0;
    stats.floor_in_window = 1.0;
    bool first_edge_seen = false;
    for (const chain::SeriesSample& sample : series.samples) {
      stats.peak = std::max(stats.peak, sample.fidelity_end);
      const bool in_window = sample.time_s >= sum.window_start_s &&
                             sample.time_s <= sum.window_end_s;
      if (!in_window) continue;
      stats.floor_in_window = std::min(stats.floor_in_window, sample.fidelity_end);
      if (!first_edge_seen) {
        stats.edge_first = sample.fidelity_end;
        first_edge_seen = true;
      }
      stats.edge_last = sample.fidelity_end;
    }
    sum.fidelity.push_back(stats);
  }
  return result;
}

std::string straylight_tag(double level_hz) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", level_hz);
  return buf;
}

std::string series_csv(const StraylightSeries& series) {
  std::string out =
      "time_s,elevation_calern_rad,elevation_palaiseau_rad,link_budget_calern,"
      "link_budget_palaiseau,sigma_sat_pairs_per_s,sigma_end_pairs_per_s,"
      "cum_sat_pairs,cum_end_pairs,werner_end,fidelity_end\n";
  for (const chain::SeriesSample& s : series.samples) {
    out += fmt(s.time_s);
    out += ',';
    out += fmt(s.elevation_a_rad);
    out += ',';
    out += fmt(s.elevation_b_rad);
    out += ',';
    out += fmt(s.path_efficiency_a);
    out += ',';
    out += fmt(s.path_efficiency_b);
    out += ',';
    out += fmt(s.sigma_sat);
    out += ',';
    out += fmt(s.sigma_end);
    out += ',';
    out += fmt(s.cum_sat);
    out += ',';
    out += fmt(s.cum_end);
    out += ',';
    out += fmt(s.werner_end);
    out += ',';
    out += fmt(s.fidelity_end);
    out += '\n';
  }
  return out;
}

std::string pass_csv(const PassGeometry& g) {
  std::string out =
      "time_s,elevation_calern_rad,slant_range_calern_m,elevation_palaiseau_rad,"
      "slant_range_palaiseau_m,dual_visible\n";
  for (std::size_t i = 0; i < g.samples.size(); ++i) {
    const orbit::PassSample& s = g.samples[i];
    out += fmt(s.time_s);
    out += ',';
    out += fmt(s.stations[0].elevation_rad);
    out += ',';
    out += fmt(s.stations[0].slant_range_m);
    out += ',';
    out += fmt(s.stations[1].elevation_rad);
    out += ',';
    out += fmt(s.stations[1].slant_range_m);
    out += ',';
    out += g.space[i].visible ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string summary_text(const RunSummary& sum) {
  std::string out;
  out += "scenario.seed = " + std::to_string(sum.seed) + "\n";
  out += "pass.window_count = " + std::to_string(sum.window_count) + "\n";
  out += "pass.window_start_s = " + fmt(sum.window_start_s) + "\n";
  out += "pass.window_end_s = " + fmt(sum.window_end_s) + "\n";
  out += "pass.duration_s = " + fmt(sum.duration_s) + "\n";
  out += "rate.peak_sigma_sat_pairs_per_s = " + fmt(sum.peak_sigma_sat) + "\n";
  out += "rate.peak_time_s = " + fmt(sum.peak_time_s) + "\n";
  out += "rate.cum_sat_pairs = " + fmt(sum.cum_sat) + "\n";
  out += "rate.cum_end_pairs = " + fmt(sum.cum_end) + "\n";
  out += "rate.end_to_ground_ratio = " + fmt(sum.end_to_ground_ratio) + "\n";
  out += "rate.cum_end_pairs_alt_mode = " + fmt(sum.cum_end_alt_mode) + "\n";
  for (const FidelityStats& f : sum.fidelity) {
    const std::string prefix = "fidelity.straylight_" + straylight_tag(f.straylight_hz);
    out += prefix + ".peak = " + fmt(f.peak) + "\n";
    out += prefix + ".floor_in_window = " + fmt(f.floor_in_window) + "\n";
    out += prefix + ".window_edge_first = " + fmt(f.edge_first) + "\n";
    out += prefix + ".window_edge_last = " + fmt(f.edge_last) + "\n";
  }
  out += "budget.delivered_pairs = " + std::to_string(sum.budget.delivered_pairs) + "\n";
  out += "budget.cz_gates = " + std::to_string(sum.budget.cz_gates) + "\n";
  out += "budget.arbitrary_two_qubit_unitaries = " +
         std::to_string(sum.budget.arbitrary_two_qubit_unitaries) + "\n";
  return out;
}

void write_simulation_outputs(const SimulationResult& result, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path dir(out_dir);
  for (const StraylightSeries& series : result.series) {
    write_file(dir / ("series_straylight_" + straylight_tag(series.straylight_hz) + ".csv"),
               series_csv(series));
  }
  write_file(dir / "summary.txt", summary_text(result.summary));
}

void write_pass_outputs(const PassGeometry& g, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  write_file(std::filesystem::path(out_dir) / "pass.csv", pass_csv(g));
}

} // namespace qinsim
