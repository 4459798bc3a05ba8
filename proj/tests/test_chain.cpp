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
#include <random>

#include "chain.hpp"
#include "channel.hpp"

using namespace qinsim;
using namespace qinsim::chain;

namespace {

devices::MemoryModel table_memory() { return devices::MemoryModel{}; }

ElementaryLink paris_link() {
  ElementaryLink link;
  link.source = devices::SourceModel{};
  link.channel1_efficiency = channel::fiber_efficiency({14.0, 0.2});
  link.channel2_efficiency = channel::fiber_efficiency({45.0, 0.2});
  link.memory_left = table_memory();
  link.memory_right = table_memory();
  link.medium_fidelity = 0.99;
  return link;
}

ElementaryLink nice_link() {
  ElementaryLink link = paris_link();
  link.channel1_efficiency = channel::fiber_efficiency({32.0, 0.2});
  link.channel2_efficiency = channel::fiber_efficiency({35.0, 0.2});
  return link;
}

ElementaryLink ideal_link() {
  ElementaryLink link;
  link.source = {1.0, 1e9, 1.0, 1550e-9};
  link.channel1_efficiency = 1.0;
  link.channel2_efficiency = 1.0;
  link.memory_left = {1.0, 1e9, 1, 0.0, 1.0};
  link.memory_right = {1.0, 1e9, 1, 0.0, 1.0};
  link.medium_fidelity = 1.0;
  return link;
}

ChainTopology table_topology() {
  ChainTopology topo;
  topo.alice = {devices::ConverterModel{}, table_memory()};
  topo.bob = {devices::ConverterModel{}, table_memory()};
  topo.links = {paris_link(), paris_link(), nice_link()};
  topo.links[1].is_space = true;
  topo.links[1].medium_fidelity = 0.99;
  topo.space_link_index = 1;
  topo.bsm_nodes = {{devices::BsmModel{}, devices::DetectorModel{}, false},
                    {devices::BsmModel{}, devices::DetectorModel{}, true},
                    {devices::BsmModel{}, devices::DetectorModel{}, true},
                    {devices::BsmModel{}, devices::DetectorModel{}, false}};
  return topo;
}

ChainTopology ideal_topology(int modes = 1) {
  ChainTopology topo;
  devices::MemoryModel mem{1.0, 1e9, modes, 0.0, 1.0};
  topo.alice = {{1.0, 1.0}, mem};
  topo.bob = {{1.0, 1.0}, mem};
  topo.links = {ideal_link(), ideal_link(), ideal_link()};
  topo.links[1].is_space = true;
  topo.space_link_index = 1;
  topo.bsm_nodes.assign(4, {{0.5}, {1.0, 0.0, 0.0}, false});
  return topo;
}

/// Exhaustive oracle: sum the probability of every slot-outcome pattern with
/// at least one success. Only practical for small mode counts.
double enumerate_window_success(const ElementaryLink& link, int modes,
                                double timeslot_s) {
  std::vector<double> p(static_cast<std::size_t>(modes));
  for (int k = 1; k <= modes; ++k)
    p[static_cast<std::size_t>(k - 1)] =
        link.source.pair_efficiency * link.channel1_efficiency *
        link.channel2_efficiency *
        devices::memory_efficiency(link.memory_left, k * timeslot_s) *
        devices::memory_efficiency(link.memory_right, k * timeslot_s);

  double total = 0.0;
  for (std::uint64_t pattern = 1; pattern < (1ull << modes); ++pattern) {
    double prob = 1.0;
    for (int k = 0; k < modes; ++k)
      prob *= (pattern >> k & 1) ? p[static_cast<std::size_t>(k)]
                                 : 1.0 - p[static_cast<std::size_t>(k)];
    total += prob;
  }
  return total;
}

} // namespace

TEST_CASE("single slot window reduces to the per-attempt probability") {
  ElementaryLink link = paris_link();
  const double expected = 0.25 * link.channel1_efficiency * link.channel2_efficiency *
                          std::pow(devices::memory_efficiency(table_memory(), 1e-9), 2);
  CHECK(elementary_link_efficiency(link, 1, 1e-9) ==
        doctest::Approx(expected).epsilon(1e-14));
  CHECK(elementary_link_efficiency(ideal_link(), 1, 1e-9) == 1.0);
}

TEST_CASE("table-parameter ground links over the full window") {
  CHECK(elementary_link_efficiency(paris_link(), 500, 1e-9) ==
        doctest::Approx(0.99966279013584091).epsilon(1e-13));
  CHECK(elementary_link_efficiency(nice_link(), 500, 1e-9) ==
        doctest::Approx(0.99598371862318390).epsilon(1e-13));
}

TEST_CASE("window efficiency is non-decreasing in the mode count and bounded") {
  std::mt19937_64 rng(31u);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    ElementaryLink link = paris_link();
    link.source.pair_efficiency = 0.1 + 0.9 * uni(rng);
    link.channel1_efficiency = 0.3 + 0.7 * uni(rng);
    link.channel2_efficiency = 0.3 + 0.7 * uni(rng);
    const double p_max = link.source.pair_efficiency * link.channel1_efficiency *
                         link.channel2_efficiency * 0.98 * 0.98;
    double prev = 0.0;
    for (int modes : {1, 2, 4, 8, 16, 64, 256}) {
      const double eta = elementary_link_efficiency(link, modes, 1e-9);
      CHECK(eta >= prev);
      CHECK(eta <= 1.0 - std::pow(1.0 - p_max, modes) + 1e-12);
      prev = eta;
    }
  }
}

TEST_CASE("space link per attempt") {
  ElementaryLink space = paris_link();
  space.is_space = true;
  space.channel1_efficiency = 4.7945668216035182e-3;  // Calern at zenith, 600 km
  space.channel2_efficiency = 2.4306395183971134e-3;  // Palaiseau at zenith, 600 km
  CHECK(space_elementary_efficiency(space, 500, 1e-9) ==
        doctest::Approx(2.7978128527e-6).epsilon(1e-9));

  ElementaryLink ideal = ideal_link();
  ideal.source.pair_efficiency = 0.25;
  CHECK(space_elementary_efficiency(ideal, 1, 1e-9) == 0.25);
}

TEST_CASE("end-to-end rate composes the printed chain") {
  SUBCASE("four perfect-detector BSMs pass one sixteenth") {
    ChainControls ctl;
    ctl.modes = 1;
    const double rate = end_to_end_rate(ideal_topology(), ctl, true);
    CHECK(rate * ctl.modes / 1e9 == 0.0625);
  }
  SUBCASE("satellite below the mask kills the rate") {
    ChainControls ctl;
    CHECK(end_to_end_rate(table_topology(), ctl, false) == 0.0);
  }
  SUBCASE("strict mode keeps the printed rate factor") {
    ChainControls ctl;
    ctl.modes = 1;
    ChainTopology topo = ideal_topology();
    const double base = end_to_end_rate(topo, ctl, true);
    ctl.strict_eq1 = true;
    CHECK(end_to_end_rate(topo, ctl, true) ==
          doctest::Approx(base * 1e18).epsilon(1e-12));
  }
}

TEST_CASE("end-to-end rate is monotone in every component efficiency") {
  ChainControls ctl;
  ctl.modes = 16;
  ChainTopology topo = table_topology();
  topo.links[1].channel1_efficiency = 3e-3;
  topo.links[1].channel2_efficiency = 2e-3;
  const double base = end_to_end_rate(topo, ctl, true);

  std::mt19937_64 rng(32u);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    ChainTopology bumped = topo;
    switch (static_cast<int>(uni(rng) * 6)) {
      case 0: bumped.alice.converter.efficiency += 0.1 * uni(rng); break;
      case 1: bumped.links[0].channel1_efficiency += 0.1 * uni(rng); break;
      case 2: bumped.links[1].channel2_efficiency *= 1.0 + uni(rng); break;
      case 3: bumped.bsm_nodes[2].detector.efficiency += 0.05 * uni(rng); break;
      case 4: bumped.links[2].source.pair_efficiency += 0.1 * uni(rng); break;
      default: bumped.bob.memory.write_efficiency += 0.01 * uni(rng); break;
    }
    CHECK(end_to_end_rate(bumped, ctl, true) >= base);
  }
}

TEST_CASE("end-to-end werner parameter") {
  ChainControls ctl;
  SUBCASE("perfect fidelities and no noise give a pure state") {
    const double w = end_to_end_werner(ideal_topology(), ctl, true).value();
    CHECK(w == 1.0);
    CHECK(devices::fidelity_from_werner(devices::WernerState(w)) == 1.0);
  }
  SUBCASE("table parameters at strong flux approach the medium product") {
    ChainTopology topo = table_topology();
    topo.links[1].channel1_efficiency = 4.8e-3;
    topo.links[1].channel2_efficiency = 2.4e-3;
    ctl.straylight_rate_hz = 0.0;
    const double w = end_to_end_werner(topo, ctl, true).value();
    const double f = devices::fidelity_from_werner(devices::WernerState(w));
    CHECK(f == doctest::Approx(0.8212905).epsilon(5e-4));
    CHECK(f <= 0.8212905095696847 + 1e-12);  // medium product is the ceiling
  }
  SUBCASE("overwhelming straylight drives the fidelity to the floor") {
    ChainTopology topo = table_topology();
    topo.links[1].channel1_efficiency = 4.8e-3;
    topo.links[1].channel2_efficiency = 2.4e-3;
    ctl.straylight_rate_hz = 1e12;
    const double w = end_to_end_werner(topo, ctl, true).value();
    CHECK(devices::fidelity_from_werner(devices::WernerState(w)) ==
          doctest::Approx(0.25).epsilon(1e-6));
  }
  SUBCASE("link down maps to the fidelity floor") {
    const double w = end_to_end_werner(table_topology(), ctl, false).value();
    CHECK(w == 0.0);
  }
  SUBCASE("link down with zero dark counts still evaluates") {
    // No source clicks and no background: the node simply never heralds.
    ChainTopology topo = table_topology();
    for (auto& node : topo.bsm_nodes) node.detector.dark_count_rate_hz = 0.0;
    const double w = end_to_end_werner(topo, ctl, false).value();
    CHECK(w == 0.0);
  }
}

TEST_CASE("cumulate integrates with the trapezoid rule") {
  std::vector<SeriesSample> series(5);
  for (std::size_t i = 0; i < series.size(); ++i) {
    series[i].time_s = static_cast<double>(i) * 2.0;
    series[i].sigma_sat = 3.0;  // constant
    series[i].sigma_end = 0.0;
  }
  cumulate(series);
  CHECK(series.front().cum_sat == 0.0);
  CHECK(series.back().cum_sat == 3.0 * 8.0);
  CHECK(series.back().cum_end == 0.0);
  for (std::size_t i = 1; i < series.size(); ++i)
    CHECK(series[i].cum_sat >= series[i - 1].cum_sat);
}

TEST_CASE("simulate_pass on an empty geometry yields an empty series") {
  ChainControls ctl;
  CHECK(simulate_pass(table_topology(), ctl, {}).empty());
}

TEST_CASE("monte carlo: degenerate links") {
  CHECK(monte_carlo_elementary(ideal_link(), 4, 1e-9, 1000, 1).estimate == 1.0);
  ElementaryLink dead = ideal_link();
  dead.source.pair_efficiency = 0.0;
  CHECK(monte_carlo_elementary(dead, 4, 1e-9, 1000, 1).estimate == 0.0);
}

TEST_CASE("monte carlo is deterministic for a fixed seed") {
  const auto a = monte_carlo_elementary(paris_link(), 32, 1e-9, 20000, 99);
  const auto b = monte_carlo_elementary(paris_link(), 32, 1e-9, 20000, 99);
  CHECK(a.successes == b.successes);
  CHECK(a.estimate == b.estimate);
}

TEST_CASE("enumeration, closed form, and monte carlo agree for small windows") {
  std::mt19937_64 rng(33u);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 12; ++trial) {
    ElementaryLink link = paris_link();
    link.source.pair_efficiency = 0.05 + 0.9 * uni(rng);
    link.channel1_efficiency = 0.2 + 0.8 * uni(rng);
    link.channel2_efficiency = 0.2 + 0.8 * uni(rng);
    link.memory_left.storage_time_s = 1e-7 + 1e-5 * uni(rng);
    link.memory_right.storage_time_s = link.memory_left.storage_time_s;
    const int modes = 1 + static_cast<int>(uni(rng) * 16);

    const double exact = enumerate_window_success(link, modes, 1e-9);
    const double closed = elementary_link_efficiency(link, modes, 1e-9);
    CHECK(std::abs(closed - exact) <= 1e-12);

    const auto mc =
        monte_carlo_elementary(link, modes, 1e-9, 20000, 1000 + trial);
    const double se = std::sqrt(exact * (1.0 - exact) / 20000.0);
    CHECK(std::abs(mc.estimate - exact) <= 3.0 * se + 1e-12);
  }
}

TEST_CASE("monte carlo at 100 trials stays near a near-certain link") {
  // The Paris window succeeds with probability 0.9997; a hundred trials
  // should miss at most a handful of times.
  const auto mc = monte_carlo_elementary(paris_link(), 500, 1e-9, 100, 77);
  CHECK(mc.estimate >= 0.95);
  CHECK(mc.estimate <= 1.0);
}

TEST_CASE("monte carlo matches the closed form on the table links") {
  for (const ElementaryLink& link : {paris_link(), nice_link()}) {
    const double closed = elementary_link_efficiency(link, 500, 1e-9);
    const auto mc = monte_carlo_elementary(link, 500, 1e-9, 100000, 4242);
    const double se = std::sqrt(closed * (1.0 - closed) / 100000.0);
    CHECK(std::abs(mc.estimate - closed) <= 3.0 * se);
  }
}
