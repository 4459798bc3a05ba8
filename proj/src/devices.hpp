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

namespace qinsim::devices {

struct SourceModel {
  double pair_efficiency = 0.25;  // probability a pump slot yields a pair
  double rate_hz = 1e9;
  double fidelity = 0.99;
  double wavelength_m = 1550e-9;
};

struct MemoryModel {
  double write_efficiency = 0.98;
  double storage_time_s = 10e-3;  // characteristic decay time
  int modes = 500;                // addressable timeslot slots
  double storage_window_s = 250e-12;
  double fidelity = 0.98;
};

struct DetectorModel {
  double efficiency = 0.9;
  double dark_count_rate_hz = 50.0;
  double straylight_rate_hz = 0.0;  // additive background, space-facing sites
};

/// Linear-optics Bell state measurement; efficiency is capped at 1/2 since
/// only two of the four Bell states can be identified.
struct BsmModel {
  double efficiency = 0.5;
};

struct ConverterModel {
  double efficiency = 0.8;
  double fidelity = 0.98;
};

/// Werner parameter: 1 is a pure Bell state, 0 the maximally mixed state.
class WernerState {
public:
  explicit WernerState(double value);
  double value() const { return value_; }

private:
  double value_;
};

/// Probability of writing and later reading a photon stored for
/// `storage_s` seconds: write_efficiency * exp(-t/tau).
double memory_efficiency(const MemoryModel& mem, double storage_s);

/// Swap success probability: eta_BSM * eta_det^2 (two detectors fire).
double swap_efficiency(const BsmModel& bsm, const DetectorModel& det);

/// Werner-state fidelity (1 + 3W) / 4.
double fidelity_from_werner(const WernerState& w);

/// Inverse of fidelity_from_werner; valid for fidelity in [0.25, 1].
WernerState werner_from_fidelity(double fidelity);

/// Probability a detector click came from the source rather than noise.
/// Throws std::domain_error when both rates are zero.
double true_click_probability(double true_rate_hz, double false_rate_hz);

/// Werner degradation of one swap node from noise clicks on both adjacent
/// links.
WernerState bsm_werner(double eta_elem_left, double eta_elem_right,
                       double source_rate_hz, double false_rate_left_hz,
                       double false_rate_right_hz);

/// Werner parameter of a user's ion-photon source after wavelength
/// conversion.
WernerState source_werner_with_conversion(const SourceModel& src,
                                          const ConverterModel& conv);

} // namespace qinsim::devices
