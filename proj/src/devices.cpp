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

#include "devices.hpp"

#include <cmath>
#include <stdexcept>

namespace qinsim::devices {

WernerState::WernerState(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0))
    throw std::domain_error("Werner parameter outside [0, 1]");
}

double memory_efficiency(const MemoryModel& mem, double storage_s) {
  return mem.write_efficiency * std::exp(-storage_s / mem.storage_time_s);
}

double swap_efficiency(const BsmModel& bsm, const DetectorModel& det) {
  return bsm.efficiency * det.efficiency * det.efficiency;
}

double fidelity_from_werner(const WernerState& w) {
  return (1.0 + 3.0 * w.value()) / 4.0;
}

WernerState werner_from_fidelity(double fidelity) {
  return WernerState((4.0 * fidelity - 1.0) / 3.0);
}

double true_click_probability(double true_rate_hz, double false_rate_hz) {
  if (true_rate_hz == 0.0 && false_rate_hz == 0.0)
    throw std::domain_error("click probability undefined with no clicks at all");
  return true_rate_hz / (true_rate_hz + false_rate_hz);
}

WernerState bsm_werner(double eta_elem_left, double eta_elem_right,
                       double source_rate_hz, double false_rate_left_hz,
                       double false_rate_right_hz) {
  const double p_left =
      true_click_probability(source_rate_hz * eta_elem_left, false_rate_left_hz);
  const double p_right =
      true_click_probability(source_rate_hz * eta_elem_right, false_rate_right_hz);
  return WernerState(p_left * p_right);
}

WernerState source_werner_with_conversion(const SourceModel& src,
                                          const ConverterModel& conv) {
  return WernerState(src.fidelity * conv.fidelity);
}

} // namespace qinsim::devices
