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

namespace qinsim::channel {

struct FiberChannel {
  double length_km = 0.0;
  double attenuation_db_per_km = 0.2;
};

/// Optics of one satellite-to-ground path. The beam waist at the transmitter
/// is tx_aperture_m / 2 throughout.
struct FreeSpaceParams {
  double wavelength_m = 1550e-9;
  double tx_aperture_m = 0.4;
  double rx_aperture_m = 1.5;
  double tx_internal = 0.7;           // transmitter telescope transmittance
  double rx_internal = 0.1;           // receiver transmittance incl. fiber coupling
  double zenith_transmittance = 0.2;  // atmosphere at elevation pi/2
};

/// Photon survival probability over the fiber: 10^(-attenuation*length/10).
double fiber_efficiency(const FiberChannel& ch);

/// Atmospheric transmittance at the given elevation,
/// zenith_transmittance^(1/sin(elevation)).
/// Throws std::domain_error for elevation <= 0 (link below the horizon).
double atmospheric_transmittance(double zenith_transmittance, double elevation_rad);

/// Gaussian beam radius after propagating `range_m` from a waist of
/// `waist0_m`.
double beam_waist(double waist0_m, double range_m, double wavelength_m);

double rayleigh_length(double waist0_m, double wavelength_m);

/// Downlink budget for a single satellite-to-ground path: transmitter
/// truncation, atmosphere, receiver collection over the diffracted beam.
/// Throws std::domain_error for elevation <= 0.
double single_path_efficiency(const FreeSpaceParams& p, double slant_range_m,
                              double elevation_rad);

} // namespace qinsim::channel
