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

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace qinsim::teleport {

/// n-qubit amplitude vector over the computational basis, unit norm.
struct QubitState {
  std::vector<std::complex<double>> amplitudes;

  std::size_t qubit_count() const;
  double norm() const;
};

enum class BellLabel : int { phi_plus = 0, phi_minus = 1, psi_plus = 2, psi_minus = 3 };

constexpr std::array<BellLabel, 4> kBellLabels = {
    BellLabel::phi_plus, BellLabel::phi_minus, BellLabel::psi_plus,
    BellLabel::psi_minus};

const char* bell_name(BellLabel label);

/// The six-qubit state |psi>_1 (x) |psi+>_23 (x) |psi>_4 for the CZ
/// teleportation circuit: photons 1..4 in polarization, the two user spins
/// entangled with photons 1 and 4. Qubit order in the amplitude index, most
/// significant first: spin_1, photon_1, photon_2, photon_3, photon_4, spin_4.
/// H and the down spin map to bit 0, V and the up spin to bit 1.
QubitState build_initial_state();

/// Coefficients of the state in the basis Bell(photons 1,2) (x)
/// Bell(photons 3,4) (x) Bell(spins 1,4), indexed [pair12][pair34][spins].
struct BellDecomposition {
  std::array<std::array<std::array<double, 4>, 4>, 4> coefficients{};

  double coefficient(BellLabel pair12, BellLabel pair34, BellLabel spins) const {
    return coefficients[static_cast<int>(pair12)][static_cast<int>(pair34)]
                       [static_cast<int>(spins)];
  }
};

/// Decompose a 64-dimensional state in the double Bell basis.
/// Throws std::domain_error when the input is not normalized.
BellDecomposition bell_decompose(const QubitState& state);

/// Probability of jointly measuring the two photonic Bell outcomes.
double outcome_probability(const QubitState& state, BellLabel outcome12,
                           BellLabel outcome34);

/// Renormalized two-spin state (qubits: spin_1, spin_4) after projecting the
/// photon pairs onto the given Bell outcomes.
/// Throws std::domain_error for a zero-probability outcome.
QubitState project_bsm(const QubitState& state, BellLabel outcome12,
                       BellLabel outcome34);

struct GateBudget {
  std::uint64_t delivered_pairs = 0;
  std::uint64_t cz_gates = 0;
  std::uint64_t arbitrary_two_qubit_unitaries = 0;
};

/// One delivered Bell pair teleports one controlled-Z gate; three CZ gates
/// compose an arbitrary two-qubit unitary.
GateBudget gate_budget(std::uint64_t delivered_pairs);

} // namespace qinsim::teleport
