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

#include "qinsim.h"

#include <cstring>
#include <new>
#include <string>

#include "errors.hpp"
#include "montecarlo.hpp"
#include "scenario.hpp"
#include "simulation.hpp"
#include "verify.hpp"

struct qinsim_scenario {
  qinsim::Scenario value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

qinsim_status fail(qinsim_status status, const char* message) {
  g_last_error = message;
  return status;
}

/// Run `fn`, translating exceptions into status codes.
template <typename Fn>
qinsim_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const qinsim::config_error& e) {
    return fail(QINSIM_ERROR_SCENARIO, e.what());
  } catch (const qinsim::geometry_error& e) {
    return fail(QINSIM_ERROR_SCENARIO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QINSIM_ERROR_IO, "out of memory");
  } catch (const std::exception& e) {
    return fail(QINSIM_ERROR_IO, e.what());
  }
}

} // namespace

extern "C" {

const char* qinsim_version(void) { return "0.1.0"; }

const char* qinsim_last_error(void) { return g_last_error.c_str(); }

void qinsim_string_free(char* text) { delete[] text; }

qinsim_status qinsim_scenario_create(qinsim_scenario** out) {
  if (out == nullptr) return fail(QINSIM_ERROR_INVALID, "null output pointer");
  return guarded([&] {
    *out = new qinsim_scenario{qinsim::default_scenario()};
    return QINSIM_OK;
  });
}

qinsim_status qinsim_scenario_load(const char* path, qinsim_scenario** out) {
  if (path == nullptr || out == nullptr)
    return fail(QINSIM_ERROR_INVALID, "null argument");
  return guarded([&] {
    *out = new qinsim_scenario{qinsim::load_scenario(path)};
    return QINSIM_OK;
  });
}

qinsim_status qinsim_scenario_parse(const char* text, qinsim_scenario** out) {
  if (text == nullptr || out == nullptr)
    return fail(QINSIM_ERROR_INVALID, "null argument");
  return guarded([&] {
    *out = new qinsim_scenario{qinsim::parse_scenario(text)};
    return QINSIM_OK;
  });
}

void qinsim_scenario_free(qinsim_scenario* scenario) { delete scenario; }

qinsim_status qinsim_scenario_set(qinsim_scenario* scenario, const char* key,
                                  const char* value) {
  if (scenario == nullptr || key == nullptr || value == nullptr)
    return fail(QINSIM_ERROR_INVALID, "null argument");
  return guarded([&] {
    qinsim::set_key(scenario->value, key, value);
    qinsim::validate(scenario->value);
    return QINSIM_OK;
  });
}

qinsim_status qinsim_scenario_get(const qinsim_scenario* scenario, const char* key,
                                  char** out_value) {
  if (scenario == nullptr || key == nullptr || out_value == nullptr)
    return fail(QINSIM_ERROR_INVALID, "null argument");
  return guarded([&] {
    *out_value = dup_string(qinsim::get_key(scenario->value, key));
    return QINSIM_OK;
  });
}

qinsim_status qinsim_schema(char** out_text) {
  if (out_text == nullptr) return fail(QINSIM_ERROR_INVALID, "null argument");
  return guarded([&] {
    std::string text;
    for (const qinsim::KeyInfo& key : qinsim::schema()) {
      text += key.key;
      text += " = ";
      text += key.doc;
      text += '\n';
    }
    *out_text = dup_string(text);
    return QINSIM_OK;
  });
}

qinsim_status qinsim_pass(const qinsim_scenario* scenario, const char* out_dir,
                          char** out_report) {
  if (scenario == nullptr || out_dir == nullptr)
    return fail(QINSIM_ERROR_INVALID, "null argument");
  return guarded([&] {
    const qinsim::PassGeometry geometry = qinsim::compute_pass(scenario->value);
    qinsim::write_pass_outputs(geometry, out_dir);
    if (out_report != nullptr)
      *out_report = dup_string(qinsim::geometry_report(scenario->value, geometry));
    return QINSIM_OK;
  });
}

qinsim_status qinsim_simulate(const qinsim_scenario* scenario, const char* out_dir,
                              char** out_summary) {
  if (scenario == nullptr || out_dir == nullptr)
    return fail(QINSIM_ERROR_INVALID, "null argument");
  return guarded([&] {
    const qinsim::SimulationResult result = qinsim::run_simulation(scenario->value);
    qinsim::write_simulation_outputs(result, out_dir);
    if (out_summary != nullptr)
      *out_summary = dup_string(qinsim::summary_text(result.summary));
    return QINSIM_OK;
  });
}

qinsim_status qinsim_verify(const char* perturbation, char** out_report) {
  return guarded([&] {
    const qinsim::VerifyReport report =
        qinsim::run_verification(perturbation == nullptr ? "" : perturbation);
    if (out_report != nullptr) *out_report = dup_string(report.text);
    if (!report.ok) {
      g_last_error = "verification failed";
      return QINSIM_ERROR_VERIFY;
    }
    return QINSIM_OK;
  });
}

qinsim_status qinsim_mc(const qinsim_scenario* scenario, uint64_t trials,
                        uint64_t seed, char** out_table) {
  if (scenario == nullptr) return fail(QINSIM_ERROR_INVALID, "null argument");
  return guarded([&] {
    const qinsim::McReport report = qinsim::run_mc(scenario->value, trials, seed);
    if (out_table != nullptr) *out_table = dup_string(report.text);
    if (!report.ok) {
      g_last_error = "monte carlo disagrees with the closed form";
      return QINSIM_ERROR_VERIFY;
    }
    return QINSIM_OK;
  });
}

} // extern "C"
