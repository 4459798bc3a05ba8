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

#include "teleport.hpp"

#include <cmath>
#include <stdexcept>

namespace qinsim::teleport {

namespace {

constexpr std::size_t kDim = 64;  // 6 qubits
constexpr double kInvSqrt2 = 0.70710678118654752440;

// Bit positions within the amplitude index (MSB first):
// spin_1, photon_1, photon_2, photon_3, photon_4, spin_4.
constexpr int kSpin1 = 5, kPhoton1 = 4, kPhoton2 = 3, kPhoton3 = 2, kPhoton4 = 1,
              kSpin4 = 0;

std::size_t basis_index(int s1, int p1, int p2, int p3, int p4, int s4) {
  return static_cast<std::size_t>(s1 << kSpin1 | p1 << kPhoton1 | p2 << kPhoton2 |
                                  p3 << kPhoton3 | p4 << kPhoton4 | s4 << kSpin4);
}

struct BellTerm {
  int first;
  int second;
  double amplitude;
};

// phi+/- = (|00> +/- |11>)/sqrt(2), psi+/- = (|01> +/- |10>)/sqrt(2).
std::array<BellTerm, 2> bell_terms(BellLabel label) {
  switch (label) {
    case BellLabel::phi_plus:  return {{{0, 0, kInvSqrt2}, {1, 1, kInvSqrt2}}};
    case BellLabel::phi_minus: return {{{0, 0, kInvSqrt2}, {1, 1, -kInvSqrt2}}};
    case BellLabel::psi_plus:  return {{{0, 1, kInvSqrt2}, {1, 0, kInvSqrt2}}};
    case BellLabel::psi_minus: return {{{0, 1, kInvSqrt2}, {1, 0, -kInvSqrt2}}};
  }
  throw std::domain_error("invalid Bell label");
}

} // namespace

const char* bell_name(BellLabel label) {
  switch (label) {
    case BellLabel::phi_plus:  return "phi+";
    case BellLabel::phi_minus: return "phi-";
    case BellLabel::psi_plus:  return "psi+";
    case BellLabel::psi_minus: return "psi-";
  }
  return "?";
}

std::size_t QubitState::qubit_count() const {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < amplitudes.size()) ++n;
  return n;
}

double QubitState::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes) sum += std::norm(a);
  return std::sqrt(sum);
}

QubitState build_initial_state() {
  QubitState state;
  state.amplitudes.assign(kDim, 0.0);
  const double amp = 1.0 / (2.0 * std::sqrt(2.0));
  for (int a = 0; a < 2; ++a) {       // photon 1 = a, spin 1 follows it
    for (int m = 0; m < 2; ++m) {     // the two terms of |psi+>_23
      const int p2 = m, p3 = 1 - m;
      for (int b = 0; b < 2; ++b)     // photon 4 = b, spin 4 follows it
        state.amplitudes[basis_index(a, a, p2, p3, b, b)] += amp;
    }
  }
  return state;
}

BellDecomposition bell_decompose(const QubitState& state) {
  if (state.amplitudes.size() != kDim)
    throw std::domain_error("bell_decompose expects a 6-qubit state");
  if (std::abs(state.norm() - 1.0) > 1e-9)
    throw std::domain_error("bell_decompose expects a normalized state");

  BellDecomposition out;
  for (BellLabel b12 : kBellLabels) {
    for (BellLabel b34 : kBellLabels) {
      for (BellLabel bs : kBellLabels) {
        double coeff = 0.0;
        for (const BellTerm& t12 : bell_terms(b12))
          for (const BellTerm& t34 : bell_terms(b34))
            for (const BellTerm& ts : bell_terms(bs)) {
              const std::size_t idx = basis_index(ts.first, t12.first, t12.second,
                                                  t34.first, t34.second, ts.second);
              coeff += t12.amplitude * t34.amplitude * ts.amplitude *
                       state.amplitudes[idx].real();
            }
        out.coefficients[static_cast<int>(b12)][static_cast<int>(b34)]
                        [static_cast<int>(bs)] = coeff;
      }
    }
  }
  return out;
}

namespace {

std::array<std::complex<double>, 4> project_spins(const QubitState& state,
                                                  BellLabel outcome12,
                                                  BellLabel outcome34) {
  std::array<std::complex<double>, 4> spins{};
  for (int s1 = 0; s1 < 2; ++s1)
    for (int s4 = 0; s4 < 2; ++s4) {
      std::complex<double> amp = 0.0;
      for (const BellTerm& t12 : bell_terms(outcome12))
        for (const BellTerm& t34 : bell_terms(outcome34))
          amp += t12.amplitude * t34.amplitude *
                 state.amplitudes[basis_index(s1, t12.first, t12.second, t34.first,
                                              t34.second, s4)];
      spins[static_cast<std::size_t>(s1 * 2 + s4)] = amp;
    }
  return spins;
}

} // namespace

double outcome_probability(const QubitState& state, BellLabel outcome12,
                           BellLabel outcome34) {
  const auto spins = project_spins(state, outcome12, outcome34);
  double p = 0.0;
  for (const auto& a : spins) p += std::norm(a);
  return p;
}

QubitState project_bsm(const QubitState& state, BellLabel outcome12,
                       BellLabel outcome34) {
  const auto spins = project_spins(state, outcome12, outcome34);
  double p = 0.0;
  for (const auto& a : spins) p += std::norm(a);
  if (p <= 0.0)
    throw std::domain_error("projection onto a zero-probability outcome");

  QubitState out;
  out.amplitudes.assign(4, 0.0);
  const double scale = 1.0 / std::sqrt(p);
  for (std::size_t i = 0; i < 4; ++i) out.amplitudes[i] = spins[i] * scale;
  return out;
}

GateBudget gate_budget(std::uint64_t delivered_pairs) {
  return {delivered_pairs, delivered_pairs, delivered_pairs / 3};
}

} // namespace qinsim::teleport
