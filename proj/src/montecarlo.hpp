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

#include <cstdint>
#include <string>
#include <vector>

#include "scenario.hpp"

namespace qinsim {

struct McRow {
  std::string link;
  double closed_form = 0.0;
  double estimate = 0.0;
  double std_error = 0.0;
  double z = 0.0;
};

struct McReport {
  bool ok = false;  // every |z| <= 5
  std::vector<McRow> rows;
  std::string text;
};

/// Closed form vs Monte Carlo for each elementary link of the scenario. The
/// space link is evaluated at the best sample of the pass when one exists.
/// Throws config_error for trials < 100.
McReport run_mc(const Scenario& s, std::uint64_t trials, std::uint64_t seed);

} // namespace qinsim
