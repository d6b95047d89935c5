/* Copyright 2026 The gaa Authors.
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

/*
 * gaa.h - C interface to the gaa amplitude-amplification simulator.
 *
 * All objects are opaque handles created by a gaa_*_new / producer call and
 * released with the matching *_free function; *_free(NULL) is a no-op.
 * Every fallible call returns a gaa_status and writes results through out
 * parameters. On failure the context keeps a human-readable message,
 * available from gaa_context_last_error() until the next call on the same
 * context. A context must not be used from two threads at once; distinct
 * contexts are independent.
 *
 * Basis indices: bit j of an index is qubit j (qubit 0 least significant).
 */

#ifndef GAA_GAA_H
#define GAA_GAA_H

#include <stddef.h>
#include <stdint.h>

#if defined(GAA_BUILDING_LIBRARY)
#define GAA_API __attribute__((visibility("default")))
#else
#define GAA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gaa_status {
    GAA_OK = 0,
    GAA_ERR_INVALID_ARGUMENT = 1, /* NULL handle or pointer, bad enum */
    GAA_ERR_DOMAIN = 2,           /* index/size/parameter outside its domain */
    GAA_ERR_UNREACHABLE = 3,      /* |<tau|U|gamma>| is numerically zero */
    GAA_ERR_DENSE_CAP = 4,        /* dense materialization above the cap */
    GAA_ERR_PARSE = 5,            /* malformed gate-list text */
    GAA_ERR_INTERNAL = 6          /* allocation failure or unexpected error */
} gaa_status;

typedef enum gaa_format { GAA_FORMAT_JSON = 0, GAA_FORMAT_TSV = 1 } gaa_format;

typedef struct gaa_context gaa_context;
typedef struct gaa_state gaa_state;
typedef struct gaa_unitary gaa_unitary;
typedef struct gaa_plan gaa_plan;
typedef struct gaa_record gaa_record;

/* Stable lowercase name of a status, e.g. "unreachable_target". */
GAA_API const char *gaa_status_name(gaa_status status);
GAA_API const char *gaa_version(void);

/* --- context ------------------------------------------------------------- */

GAA_API gaa_context *gaa_context_new(void);
GAA_API void gaa_context_free(gaa_context *ctx);
/* Message of the last failed call, or "" */
GAA_API const char *gaa_context_last_error(const gaa_context *ctx);
/* Largest qubit count for which dense matrices may be built (default 12). */
GAA_API gaa_status gaa_context_set_dense_cap(gaa_context *ctx, unsigned cap);
GAA_API unsigned gaa_context_dense_cap(const gaa_context *ctx);

/* --- states -------------------------------------------------------------- */

GAA_API gaa_status gaa_state_new_basis(gaa_context *ctx, unsigned num_qubits,
                                       uint64_t index, gaa_state **out);
GAA_API void gaa_state_free(gaa_state *state);
GAA_API unsigned gaa_state_num_qubits(const gaa_state *state);
GAA_API gaa_status gaa_state_amplitude(gaa_context *ctx, const gaa_state *state,
                                       uint64_t index, double *re, double *im);
GAA_API gaa_status gaa_state_probability(gaa_context *ctx, const gaa_state *state,
                                         uint64_t index, double *out);
/* Draws one basis index with probability |amp|^2 (deterministic per seed). */
GAA_API gaa_status gaa_state_sample(gaa_context *ctx, const gaa_state *state,
                                    uint64_t seed, uint64_t *out);

/* --- unitaries ----------------------------------------------------------- */

GAA_API gaa_status gaa_unitary_walsh_hadamard(gaa_context *ctx, unsigned num_qubits,
                                              gaa_unitary **out);
GAA_API gaa_status gaa_unitary_biased(gaa_context *ctx, unsigned num_qubits,
                                      double alpha, gaa_unitary **out);
/* Gate-list text (H / GATE / BIAS / PHASE lines). num_qubits = 0 infers
 * the register size from the operations. */
GAA_API gaa_status gaa_unitary_from_gate_list(gaa_context *ctx, const char *text,
                                              unsigned num_qubits, gaa_unitary **out);
GAA_API gaa_status gaa_unitary_adjoint(gaa_context *ctx, const gaa_unitary *u,
                                       gaa_unitary **out);
GAA_API void gaa_unitary_free(gaa_unitary *u);
GAA_API unsigned gaa_unitary_num_qubits(const gaa_unitary *u);
/* In place: state <- u * state. */
GAA_API gaa_status gaa_unitary_apply(gaa_context *ctx, const gaa_unitary *u,
                                     gaa_state *state);
/* <tau|u|gamma> */
GAA_API gaa_status gaa_unitary_transition_amplitude(gaa_context *ctx,
                                                    const gaa_unitary *u,
                                                    uint64_t gamma, uint64_t tau,
                                                    double *re, double *im);

/* --- amplification plans ------------------------------------------------- */

/* conjugator may be NULL. Phases are in radians; pass M_PI for inversions. */
GAA_API gaa_status gaa_plan_new(gaa_context *ctx, const gaa_unitary *u,
                                uint64_t gamma, uint64_t tau,
                                const gaa_unitary *conjugator, double phase_gamma,
                                double phase_tau, gaa_plan **out);
GAA_API void gaa_plan_free(gaa_plan *plan);
GAA_API double gaa_plan_u_tg_magnitude(const gaa_plan *plan);
GAA_API double gaa_plan_theta(const gaa_plan *plan);
GAA_API uint64_t gaa_plan_m_star(const gaa_plan *plan);
/* final = U_eff Q^m |gamma>; either out pointer may be NULL. */
GAA_API gaa_status gaa_plan_run(gaa_context *ctx, const gaa_plan *plan, uint64_t m,
                                double *success, gaa_state **final_state);
/* success[0..m_max]; the buffer must hold m_max + 1 doubles. */
GAA_API gaa_status gaa_plan_success_trace(gaa_context *ctx, const gaa_plan *plan,
                                          uint64_t m_max, double *success);

/* --- experiments --------------------------------------------------------- *
 * Each producer returns a record: inputs, a numeric table and a summary.
 * For search commands m < 0 means "use m*"; the sampled outcome is drawn
 * from the final state with `seed`. */

GAA_API gaa_status gaa_search_wh(gaa_context *ctx, unsigned n, uint64_t tau,
                                 int64_t m, uint64_t seed, gaa_record **out);
GAA_API gaa_status gaa_search_from(gaa_context *ctx, unsigned n, uint64_t gamma,
                                   uint64_t tau, int64_t m, uint64_t seed,
                                   gaa_record **out);
/* alpha <= 0 selects the default n/k. */
GAA_API gaa_status gaa_search_near(gaa_context *ctx, unsigned n, uint64_t word,
                                   uint64_t tau, unsigned k, double alpha, int64_t m,
                                   uint64_t seed, gaa_record **out);
/* num_qubits = 0 infers the register size from the circuit. */
GAA_API gaa_status gaa_boost(gaa_context *ctx, const char *circuit_text,
                             unsigned num_qubits, uint64_t gamma, uint64_t tau,
                             int64_t m, uint64_t seed, gaa_record **out);
GAA_API gaa_status gaa_sweep(gaa_context *ctx, unsigned n, uint64_t gamma,
                             uint64_t tau, uint64_t m_max, gaa_record **out);
GAA_API gaa_status gaa_sensitivity(gaa_context *ctx, unsigned n, uint64_t tau,
                                   const double *deltas, size_t num_deltas,
                                   unsigned trials, uint64_t seed, gaa_record **out);
GAA_API gaa_status gaa_phases(gaa_context *ctx, unsigned n, uint64_t tau,
                              const double *phis, size_t num_phis, uint64_t m_max,
                              gaa_record **out);
GAA_API gaa_status gaa_conjugator(gaa_context *ctx, unsigned n, uint64_t gamma,
                                  uint64_t tau, uint64_t seed, uint64_t m_max,
                                  int identity_v, gaa_record **out);
/* *passed is set to 1 iff every residual is within tolerance. */
GAA_API gaa_status gaa_verify(gaa_context *ctx, unsigned n, unsigned trials,
                              uint64_t seed, uint64_t m_max, gaa_record **out,
                              int *passed);

/* --- records ------------------------------------------------------------- */

GAA_API void gaa_record_free(gaa_record *record);
/* Adds or replaces an entry in the record's params object. */
GAA_API gaa_status gaa_record_set_param_int(gaa_context *ctx, gaa_record *record,
                                            const char *key, int64_t value);
GAA_API gaa_status gaa_record_set_param_double(gaa_context *ctx, gaa_record *record,
                                               const char *key, double value);
GAA_API gaa_status gaa_record_set_param_string(gaa_context *ctx, gaa_record *record,
                                               const char *key, const char *value);
GAA_API gaa_status gaa_record_set_param_doubles(gaa_context *ctx, gaa_record *record,
                                                const char *key, const double *values,
                                                size_t count);
GAA_API gaa_status gaa_record_set_timestamp(gaa_context *ctx, gaa_record *record,
                                            const char *timestamp);
GAA_API size_t gaa_record_num_rows(const gaa_record *record);
GAA_API size_t gaa_record_num_columns(const gaa_record *record);
/* Column name, valid until the record is freed; NULL when out of range. */
GAA_API const char *gaa_record_column_name(const gaa_record *record, size_t column);
GAA_API gaa_status gaa_record_value(gaa_context *ctx, const gaa_record *record,
                                    size_t row, const char *column, double *out);
/* Serializes the record; free the returned string with gaa_string_free. */
GAA_API gaa_status gaa_record_serialize(gaa_context *ctx, const gaa_record *record,
                                        gaa_format format, char **out);
GAA_API void gaa_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* GAA_GAA_H */
