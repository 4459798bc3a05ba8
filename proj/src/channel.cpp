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

#include "channel.hpp"

#include <cmath>
#include <stdexcept>

namespace qinsim::channel {

double fiber_efficiency(const FiberChannel& ch) {
  return std::pow(10.0, -ch.attenuation_db_per_km * ch.length_km / 10.0);
}

double atmospheric_transmittance(double zenith_transmittance, double elevation_rad) {
  if (!(elevation_rad > 0.0))
    throw std::domain_error("atmospheric transmittance undefined at or below the horizon");
  return std::pow(zenith_transmittance, 1.0 / std::sin(elevation_rad));
}

double rayleigh_length(double waist0_m, double wavelength_m) {
  return M_PI * waist0_m * waist0_m / wavelength_m;
}

double beam_waist(double waist0_m, double range_m, double wavelength_m) {
  const double ratio = range_m / rayleigh_length(waist0_m, wavelength_m);
  return waist0_m * std::sqrt(1.0 + ratio * ratio);
}

double single_path_efficiency(const FreeSpaceParams& p, double slant_range_m,
                              double elevation_rad) {
  const double eta_atm = atmospheric_transmittance(p.zenith_transmittance, elevation_rad);
  const double dt2 = p.tx_aperture_m * p.tx_aperture_m;
  const double dr2 = p.rx_aperture_m * p.rx_aperture_m;
  const double spread = 16.0 * p.wavelength_m * p.wavelength_m * slant_range_m *
                        slant_range_m / (M_PI * M_PI * dt2 * dt2);
  const double rx_collection = -std::expm1(-(2.0 * dr2 / dt2) / (1.0 + spread));
  const double tx_truncation = -std::expm1(-2.0);
  return p.tx_internal * tx_truncation * eta_atm * p.rx_internal * rx_collection;
}

} // namespace qinsim::channel
