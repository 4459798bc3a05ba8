/* Copyright 2026 the qinsim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* qinsim: satellite-enabled quantum network simulator, C interface.
 *
 * All entry points return a qinsim_status; QINSIM_OK is 0. On failure,
 * qinsim_last_error() describes what went wrong (thread-local). Strings
 * returned through `char**` parameters are owned by the caller and released
 * with qinsim_string_free().
 */

#ifndef QINSIM_H
#define QINSIM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qinsim_status {
  QINSIM_OK = 0,
  QINSIM_ERROR_VERIFY = 1,   /* verification or statistical check failed */
  QINSIM_ERROR_SCENARIO = 2, /* bad scenario input or unusable geometry */
  QINSIM_ERROR_IO = 3,       /* file could not be read or written */
  QINSIM_ERROR_INVALID = 4   /* null handle or invalid argument */
} qinsim_status;

/* Opaque scenario handle. */
typedef struct qinsim_scenario qinsim_scenario;

const char* qinsim_version(void);
const char* qinsim_last_error(void);
void qinsim_string_free(char* text);

/* -- scenario ----------------------------------------------------------- */

/* Create a scenario with the built-in defaults. */
qinsim_status qinsim_scenario_create(qinsim_scenario** out);

/* Parse a scenario file / config text over the defaults. */
qinsim_status qinsim_scenario_load(const char* path, qinsim_scenario** out);
qinsim_status qinsim_scenario_parse(const char* text, qinsim_scenario** out);

void qinsim_scenario_free(qinsim_scenario* scenario);

/* Override or read one key ("section.name"), validated like file input. */
qinsim_status qinsim_scenario_set(qinsim_scenario* scenario, const char* key,
                                  const char* value);
qinsim_status qinsim_scenario_get(const qinsim_scenario* scenario, const char* key,
                                  char** out_value);

/* Newline-separated "key = doc" listing of every accepted config key. */
qinsim_status qinsim_schema(char** out_text);

/* -- runs --------------------------------------------------------------- */

/* Geometry only: writes <out_dir>/pass.csv, reports the visibility windows. */
qinsim_status qinsim_pass(const qinsim_scenario* scenario, const char* out_dir,
                          char** out_report);

/* Full run: writes one series CSV per straylight level plus summary.txt into
 * out_dir and returns the summary text. Fails with QINSIM_ERROR_SCENARIO
 * (and a geometry report in qinsim_last_error) when the pass never reaches
 * dual visibility. */
qinsim_status qinsim_simulate(const qinsim_scenario* scenario, const char* out_dir,
                              char** out_summary);

/* Built-in analytic self-checks. `perturbation` is NULL for the real run or
 * "bell-sign" to demonstrate a detectable failure. Returns
 * QINSIM_ERROR_VERIFY when a check fails; the report is produced either
 * way. */
qinsim_status qinsim_verify(const char* perturbation, char** out_report);

/* Monte Carlo vs closed form per elementary link. Returns
 * QINSIM_ERROR_VERIFY when an estimate sits more than five standard errors
 * from the closed form. */
qinsim_status qinsim_mc(const qinsim_scenario* scenario, uint64_t trials,
                        uint64_t seed, char** out_table);

#ifdef __cplusplus
}
#endif

#endif /* QINSIM_H */
