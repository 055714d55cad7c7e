/* Copyright 2026 The Authors.
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

/* C interface to the information-exchange mechanism library.
 *
 * Scenario documents and reports are JSON text; see the project README
 * for the schemas. All functions that can fail return an IEX_* status
 * and, on error, write a diagnostic into the caller-provided buffer.
 * Strings returned through out-parameters are heap-allocated and must be
 * released with iex_string_free().
 */

#ifndef INFOEXCH_H
#define INFOEXCH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. IEX_FAIL is not an error: it reports that a verified
 * property was violated (the report text carries the counterexample). */
#define IEX_OK 0
#define IEX_FAIL 1
#define IEX_ERR_INPUT 2
#define IEX_ERR_CAPACITY 3
#define IEX_ERR_INTERNAL 4

typedef struct iex_scenario iex_scenario;

const char* iex_version(void);

/* Parses and validates a scenario document. Returns NULL on error and
 * fills err (when non-NULL) with a diagnostic. */
iex_scenario* iex_scenario_parse(const char* text, char* err, size_t err_cap);
void iex_scenario_free(iex_scenario* s);

/* Canonical re-emission of a parsed scenario (byte-stable). */
int iex_scenario_emit(const iex_scenario* s, char** out_doc,
                      char* err, size_t err_cap);

/* Deterministic seeded generation of a scenario document.
 * kind: "set-union" | "interval" | "average" | "general"
 * value_kind (general only): "coverage" | "table"; pass NULL otherwise. */
int iex_gen(const char* kind, int players, int universe_size,
            const char* value_kind, uint64_t seed,
            char** out_doc, char* err, size_t err_cap);

/* Runs a mechanism on a scenario and returns the run report.
 * mechanism: "two-party" | "three-party" | "multiparty-aon" |
 *            "interval" | "average" | "general". */
int iex_run(const iex_scenario* s, const char* mechanism,
            int with_pareto_repair, char** out_report,
            char* err, size_t err_cap);

/* Verifies properties on one scenario. properties_csv: comma-separated
 * subset of {truthful-aon, truthful-subsets, pareto, welfare-v, symmetry,
 * strong-dominance, phi-inequality, average-delta} or "all" / NULL.
 * mechanism may name a negative-control mechanism; NULL = the real one.
 * Returns IEX_OK when all pass, IEX_FAIL on a violation (or, with
 * strict != 0, on a capacity skip). */
int iex_verify_scenario(const iex_scenario* s, const char* properties_csv,
                        const char* mechanism, int strict,
                        char** out_report, char* err, size_t err_cap);

/* Generates `count` seeded instances of `kind` and verifies them. */
int iex_verify_sweep(const char* kind, const char* properties_csv,
                     int count, uint64_t seed, int players,
                     int universe_size, const char* mechanism, int strict,
                     char** out_report, char* err, size_t err_cap);

void iex_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* INFOEXCH_H */
