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
#include <string>

#include "teleport.hpp"

namespace qinsim {

struct VerifyReport {
  bool ok = false;
  std::string text;
};

/// Reference Bell-basis expansion of the teleportation input state: sixteen
/// entries of magnitude 1/4.
struct BellReferenceEntry {
  teleport::BellLabel pair12;
  teleport::BellLabel pair34;
  teleport::BellLabel spins;
  int sign;
};
const std::array<BellReferenceEntry, 16>& bell_reference_table();

/// Self-check suite: Bell expansion against the reference table and its
/// round trip, the worked projection, the four-BSM loss identity, the
/// equivalence of the two receiver-bracket forms, and the Werner-fidelity
/// inverse. `perturbation` ("bell-sign") flips one reference sign to prove
/// the check can fail.
VerifyReport run_verification(const std::string& perturbation = {});

} // namespace qinsim
