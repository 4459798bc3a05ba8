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

#include "verify.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "chain.hpp"
#include "channel.hpp"
#include "devices.hpp"

namespace qinsim {

namespace {

using teleport::BellLabel;

constexpr double kTol = 1e-12;

std::string fmt(const char* format, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), format, a, b);
  return buf;
}

} // namespace

const std::array<BellReferenceEntry, 16>& bell_reference_table() {
  using enum BellLabel;
  static const std::array<BellReferenceEntry, 16> table = {{
      {phi_plus, psi_plus, phi_plus, +1},
      {psi_plus, phi_plus, phi_plus, +1},
      {psi_minus, phi_minus, phi_plus, +1},
      {phi_minus, psi_minus, phi_plus, -1},
      {phi_minus, psi_plus, phi_minus, +1},
      {psi_minus, phi_plus, phi_minus, +1},
      {psi_plus, phi_minus, phi_minus, +1},
      {phi_plus, psi_minus, phi_minus, -1},
      {phi_plus, phi_plus, psi_plus, +1},
      {phi_minus, phi_minus, psi_plus, -1},
      {psi_plus, psi_plus, psi_plus, +1},
      {psi_minus, psi_minus, psi_plus, +1},
      {phi_minus, phi_plus, psi_minus, +1},
      {phi_plus, phi_minus, psi_minus, -1},
      {psi_plus, psi_minus, psi_minus, +1},
      {psi_minus, psi_plus, psi_minus, +1},
  }};
  return table;
}

VerifyReport run_verification(const std::string& perturbation) {
  VerifyReport report;
  bool ok = true;
  auto record = [&](const char* name, bool pass, const std::string& detail) {
    report.text += std::string(pass ? "ok   " : "FAIL ") + name;
    if (!detail.empty()) report.text += ": " + detail;
    report.text += "\n";
    ok = ok && pass;
  };

  std::array<BellReferenceEntry, 16> reference = bell_reference_table();
  if (perturbation == "bell-sign") {
    reference[0].sign = -reference[0].sign;
  } else if (!perturbation.empty()) {
    record("perturbation", false, "unknown perturbation '" + perturbation + "'");
    report.ok = false;
    return report;
  }

  const teleport::QubitState state = teleport::build_initial_state();
  const teleport::BellDecomposition decomp = teleport::bell_decompose(state);

  // Bell coefficients: the sixteen tabulated entries carry +-1/4, everything
  // else vanishes.
  {
    int matched = 0;
    double worst = 0.0;
    bool table_hit[4][4][4] = {};
    for (const BellReferenceEntry& e : reference) {
      const double got = decomp.coefficient(e.pair12, e.pair34, e.spins);
      const double diff = std::abs(got - 0.25 * e.sign);
      worst = std::max(worst, diff);
      if (diff <= kTol) ++matched;
      table_hit[static_cast<int>(e.pair12)][static_cast<int>(e.pair34)]
               [static_cast<int>(e.spins)] = true;
    }
    double worst_zero = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          if (!table_hit[a][b][c])
            worst_zero = std::max(worst_zero, std::abs(decomp.coefficients[a][b][c]));
    record("bell-coefficients", matched == 16 && worst_zero <= kTol,
           std::to_string(matched) + "/16 Bell coefficients matched" +
               fmt(", max |err| %.3g, max stray %.3g", worst, worst_zero));
  }

  // Round trip: the sixteen coefficients rebuild the input state.
  {
    std::array<double, 64> rebuilt{};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) {
          const double coeff = decomp.coefficients[a][b][c];
          if (coeff == 0.0) continue;
          // Accumulate coeff * |bell_a>_12 |bell_b>_34 |bell_c>_spins.
          const auto add = [&](int q1, int q2, double w12) {
            const auto add34 = [&](int q3, int q4, double w34) {
              const auto adds = [&](int s1, int s4, double ws) {
                const std::size_t idx =
                    static_cast<std::size_t>(s1 << 5 | q1 << 4 | q2 << 3 | q3 << 2 |
                                             q4 << 1 | s4);
                rebuilt[idx] += coeff * w12 * w34 * ws;
              };
              const double r = 1.0 / std::sqrt(2.0);
              if (c == 0 || c == 1) {
                adds(0, 0, r);
                adds(1, 1, c == 0 ? r : -r);
              } else {
                adds(0, 1, r);
                adds(1, 0, c == 2 ? r : -r);
              }
            };
            const double r = 1.0 / std::sqrt(2.0);
            if (b == 0 || b == 1) {
              add34(0, 0, r);
              add34(1, 1, b == 0 ? r : -r);
            } else {
              add34(0, 1, r);
              add34(1, 0, b == 2 ? r : -r);
            }
          };
          const double r = 1.0 / std::sqrt(2.0);
          if (a == 0 || a == 1) {
            add(0, 0, r);
            add(1, 1, a == 0 ? r : -r);
          } else {
            add(0, 1, r);
            add(1, 0, a == 2 ? r : -r);
          }
        }
    double worst = 0.0;
    for (std::size_t i = 0; i < 64; ++i)
      worst = std::max(worst, std::abs(rebuilt[i] - state.amplitudes[i].real()));
    record("bell-roundtrip", worst <= kTol, fmt("max amplitude error %.3g", worst));
  }

  // Worked projection and outcome completeness.
  {
    const teleport::QubitState spins =
        teleport::project_bsm(state, BellLabel::phi_plus, BellLabel::psi_plus);
    const double r = 1.0 / std::sqrt(2.0);
    const double err = std::max(
        {std::abs(spins.amplitudes[0].real() - r), std::abs(spins.amplitudes[1]),
         std::abs(spins.amplitudes[2]), std::abs(spins.amplitudes[3].real() - r)});
    double prob_sum = 0.0;
    double prob_err = 0.0;
    for (BellLabel b12 : teleport::kBellLabels)
      for (BellLabel b34 : teleport::kBellLabels) {
        const double p = teleport::outcome_probability(state, b12, b34);
        prob_sum += p;
        prob_err = std::max(prob_err, std::abs(p - 1.0 / 16.0));
      }
    record("bell-projection",
           err <= kTol && prob_err <= kTol && std::abs(prob_sum - 1.0) <= kTol,
           fmt("projection error %.3g, outcome probability error %.3g", err, prob_err));
  }

  // Four perfect-detector BSMs pass exactly 1/16 of the windows.
  {
    devices::SourceModel ideal_source{1.0, 1e9, 1.0, 1550e-9};
    devices::MemoryModel ideal_memory{1.0, 1e9, 1, 0.0, 1.0};
    chain::ElementaryLink link{ideal_source, 1.0, 1.0, ideal_memory, ideal_memory, 1.0,
                               false};
    chain::ChainTopology topo;
    topo.alice = {{1.0, 1.0}, ideal_memory};
    topo.bob = {{1.0, 1.0}, ideal_memory};
    topo.links = {link, link, link};
    topo.links[1].is_space = true;
    topo.space_link_index = 1;
    topo.bsm_nodes.assign(4, {{0.5}, {1.0, 0.0, 0.0}, false});
    chain::ChainControls ctl;
    ctl.modes = 1;
    ctl.timeslot_s = 1e-9;
    const double transmission =
        chain::end_to_end_rate(topo, ctl, true) * ctl.modes / ideal_source.rate_hz;
    record("bsm-loss-identity", transmission == 0.0625,
           fmt("transmission %.10g (expected 0.0625 exactly)", transmission));
  }

  // The printed receiver bracket equals the Gaussian-beam form with the
  // waist at half the transmit aperture.
  {
    std::mt19937_64 rng(7041u);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      channel::FreeSpaceParams p;
      p.wavelength_m = 0.5e-6 + 2.0e-6 * uni(rng);
      p.tx_aperture_m = 0.1 + 0.9 * uni(rng);
      p.rx_aperture_m = 0.2 + 2.8 * uni(rng);
      p.tx_internal = 1.0;
      p.rx_internal = 1.0;
      p.zenith_transmittance = 1.0;
      const double r = 4e5 + 2e6 * uni(rng);
      const double printed =
          channel::single_path_efficiency(p, r, M_PI / 2) / -std::expm1(-2.0);
      const double waist = channel::beam_waist(p.tx_aperture_m / 2.0, r, p.wavelength_m);
      const double gaussian =
          -std::expm1(-(p.rx_aperture_m * p.rx_aperture_m) / (2.0 * waist * waist));
      worst = std::max(worst, std::abs(printed - gaussian) / gaussian);
    }
    record("receiver-bracket-equivalence", worst <= kTol,
           fmt("max relative difference %.3g over 100 draws", worst));
  }

  // Werner parameter and fidelity invert each other.
  {
    std::mt19937_64 rng(7042u);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double w = uni(rng);
      const double back = devices::werner_from_fidelity(
                              devices::fidelity_from_werner(devices::WernerState(w)))
                              .value();
      worst = std::max(worst, std::abs(back - w));
    }
    record("werner-fidelity-inverse", worst <= kTol,
           fmt("max round-trip error %.3g over 100 draws", worst));
  }

  report.ok = ok;
  report.text += ok ? "verification passed\n" : "verification FAILED\n";
  return report;
}

} // namespace qinsim
