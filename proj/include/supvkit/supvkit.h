/* Copyright 2026 The supvkit Authors
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

/* C interface to supvkit, a supervisory control toolkit for discrete-event
 * systems.
 *
 * Conventions:
 *  - Every function returning int returns SUPVKIT_OK or an error code; on
 *    error, supvkit_last_error() describes the failure for the calling
 *    thread until its next call into the library.
 *  - Automata are opaque handles released with supvkit_automaton_free().
 *    Functions never take ownership of their inputs.
 *  - char* outputs are heap strings released with supvkit_string_free().
 *  - Observation masks are arrays of unobservable event labels; an empty
 *    array means full observation.
 *  - Check functions set *holds to 1 or 0 and, if report is non-null, store
 *    a JSON report (witness strings as label arrays).
 */

#ifndef SUPVKIT_SUPVKIT_H_
#define SUPVKIT_SUPVKIT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SUPVKIT_BUILDING)
#define SUPVKIT_API __declspec(dllexport)
#else
#define SUPVKIT_API __declspec(dllimport)
#endif
#else
#define SUPVKIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct supvkit_automaton supvkit_automaton;

enum supvkit_status {
  SUPVKIT_OK = 0,
  SUPVKIT_E_PARSE = 2,
  SUPVKIT_E_VALIDATION = 3,
  SUPVKIT_E_ALPHABET_MISMATCH = 4,
  SUPVKIT_E_CONFLICTING_ATTRIBUTES = 5,
  SUPVKIT_E_NOT_SUBBEHAVIOR = 6,
  SUPVKIT_E_CONTAINMENT_VIOLATED = 7,
  SUPVKIT_E_NON_CONGRUENCE_COVER = 8,
  SUPVKIT_E_BUDGET_EXCEEDED = 9,
  SUPVKIT_E_INVALID_ARGUMENT = 10,
  SUPVKIT_E_IO = 11,
  SUPVKIT_E_INTERNAL = 99
};

enum supvkit_ambient_policy {
  SUPVKIT_AMBIENT_CURRENT = 0,
  SUPVKIT_AMBIENT_FIXED = 1
};

SUPVKIT_API const char* supvkit_version(void);
SUPVKIT_API const char* supvkit_status_name(int status);
SUPVKIT_API const char* supvkit_last_error(void);
SUPVKIT_API void supvkit_string_free(char* s);

/* Documents. */
SUPVKIT_API int supvkit_automaton_parse(const char* json,
                                        supvkit_automaton** out);
SUPVKIT_API int supvkit_automaton_load(const char* path,
                                       supvkit_automaton** out);
SUPVKIT_API int supvkit_automaton_save(const supvkit_automaton* a,
                                       const char* path);
SUPVKIT_API int supvkit_automaton_to_json(const supvkit_automaton* a,
                                          char** out);
SUPVKIT_API int supvkit_automaton_to_dot(const supvkit_automaton* a,
                                         char** out);
SUPVKIT_API void supvkit_automaton_free(supvkit_automaton* a);

SUPVKIT_API int supvkit_automaton_set_name(supvkit_automaton* a,
                                           const char* name);
SUPVKIT_API size_t supvkit_automaton_state_count(const supvkit_automaton* a);
SUPVKIT_API size_t supvkit_automaton_transition_count(
    const supvkit_automaton* a);
SUPVKIT_API size_t supvkit_automaton_event_count(const supvkit_automaton* a);
/* The label stays valid while `a` lives. */
SUPVKIT_API int supvkit_automaton_event_label(const supvkit_automaton* a,
                                              size_t index,
                                              const char** label);
SUPVKIT_API int supvkit_automaton_accepts(const supvkit_automaton* a,
                                          const char* const* labels,
                                          size_t count, int* in_closed,
                                          int* in_marked);

/* Construction and synthesis. */
SUPVKIT_API int supvkit_sync(const supvkit_automaton* a,
                             const supvkit_automaton* b,
                             supvkit_automaton** out);
SUPVKIT_API int supvkit_meet(const supvkit_automaton* a,
                             const supvkit_automaton* b,
                             supvkit_automaton** out);
SUPVKIT_API int supvkit_trim(const supvkit_automaton* a,
                             supvkit_automaton** out);
/* Self-loops the events of `reference` that `a` lacks. */
SUPVKIT_API int supvkit_lift(const supvkit_automaton* a,
                             const supvkit_automaton* reference,
                             supvkit_automaton** out);
/* The spec must be over the plant alphabet (see supvkit_lift). The result
 * carries per-state flags as annotations. */
SUPVKIT_API int supvkit_supcon(const supvkit_automaton* plant,
                               const supvkit_automaton* spec,
                               supvkit_automaton** out);
SUPVKIT_API int supvkit_supconrobs(const supvkit_automaton* plant,
                                   const supvkit_automaton* spec,
                                   const char* const* unobservable,
                                   size_t count, int ambient_policy,
                                   supvkit_automaton** out);
/* Reduced supervisor of `sup` (recomputed flags against `plant`); the
 * result is annotated with the cell of every supervisor state. */
SUPVKIT_API int supvkit_supreduce(const supvkit_automaton* plant,
                                  const supvkit_automaton* sup,
                                  supvkit_automaton** out);
SUPVKIT_API int supvkit_project(const supvkit_automaton* a,
                                const char* const* unobservable, size_t count,
                                supvkit_automaton** out);

/* Checks. */
SUPVKIT_API int supvkit_isomorphic(const supvkit_automaton* a,
                                   const supvkit_automaton* b, int* holds,
                                   char** report);
SUPVKIT_API int supvkit_language_equal(const supvkit_automaton* a,
                                       const supvkit_automaton* b, int* holds,
                                       char** report);
SUPVKIT_API int supvkit_check_observable(const supvkit_automaton* sup,
                                         const supvkit_automaton* plant,
                                         const char* const* unobservable,
                                         size_t count, int* holds,
                                         char** report);
SUPVKIT_API int supvkit_check_relatively_observable(
    const supvkit_automaton* sup, const supvkit_automaton* ambient,
    const supvkit_automaton* plant, const char* const* unobservable,
    size_t count, int* holds, char** report);
SUPVKIT_API int supvkit_check_normal(const supvkit_automaton* sup,
                                     const supvkit_automaton* plant,
                                     const char* const* unobservable,
                                     size_t count, int* holds, char** report);
SUPVKIT_API int supvkit_check_control_equivalent(
    const supvkit_automaton* candidate, const supvkit_automaton* sup,
    const supvkit_automaton* plant, int* holds, char** report);
SUPVKIT_API int supvkit_check_rsup_normality(const supvkit_automaton* rsup,
                                             const supvkit_automaton* sup,
                                             const supvkit_automaton* plant,
                                             int* holds, char** report);

/* Analysis. Reports are JSON. */
SUPVKIT_API int supvkit_classify_selfloops(const supvkit_automaton* a,
                                           char** report);
SUPVKIT_API int supvkit_find_projections(const supvkit_automaton* sup,
                                         const supvkit_automaton* plant,
                                         const supvkit_automaton* ambient,
                                         int exhaustive, char** report);
/* Line-oriented text report; *failures counts seeds with a structural
 * failure or a violated property. */
SUPVKIT_API int supvkit_harness(uint64_t first_seed, size_t count,
                                size_t max_states, size_t max_events,
                                char** report, size_t* failures);

/* Bundled models, e.g. "transfer_line/plant" or "guideway/sup3". */
SUPVKIT_API int supvkit_model_names(char** newline_separated);
SUPVKIT_API int supvkit_model(const char* name, supvkit_automaton** out);

#ifdef __cplusplus
}
#endif

#endif /* SUPVKIT_SUPVKIT_H_ */
