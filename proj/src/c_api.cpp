// Copyright 2026 The gaa Authors.
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

#include "gaa/gaa.h"

#include <cmath>
#include <cstring>
#include <new>
#include <string>

#include "gaa/errors.hpp"
#include "gaa/lab.hpp"
#include "gaa/searches.hpp"

struct gaa_context {
    std::string last_error;
    unsigned dense_cap = gaa::default_dense_cap;
};

struct gaa_state {
    gaa::StateVector value;
};

struct gaa_unitary {
    gaa::UnitaryExpr value;
};

struct gaa_plan {
    gaa::AmplificationPlan value;
};

struct gaa_record {
    gaa::ExperimentRecord value;
};

namespace {

// Runs `body`, translating exceptions into status codes and recording the
// message on the context.
template <class F> gaa_status guarded(gaa_context *ctx, F &&body) {
    if (ctx == nullptr) {
        return GAA_ERR_INVALID_ARGUMENT;
    }
    ctx->last_error.clear();
    try {
        body();
        return GAA_OK;
    } catch (const gaa::UnreachableTarget &e) {
        ctx->last_error = e.what();
        return GAA_ERR_UNREACHABLE;
    } catch (const gaa::DenseCapExceeded &e) {
        ctx->last_error = e.what();
        return GAA_ERR_DENSE_CAP;
    } catch (const gaa::DomainError &e) {
        ctx->last_error = e.what();
        return GAA_ERR_DOMAIN;
    } catch (const gaa::ParseError &e) {
        ctx->last_error = e.what();
        return GAA_ERR_PARSE;
    } catch (const std::invalid_argument &e) {
        ctx->last_error = e.what();
        return GAA_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc &) {
        ctx->last_error = "out of memory";
        return GAA_ERR_INTERNAL;
    } catch (const std::exception &e) {
        ctx->last_error = e.what();
        return GAA_ERR_INTERNAL;
    } catch (...) {
        ctx->last_error = "unknown error";
        return GAA_ERR_INTERNAL;
    }
}

template <class T> void require(const T *p, const char *what) {
    if (p == nullptr) {
        throw std::invalid_argument(std::string(what) + " is NULL");
    }
}

double search_row(gaa::ExperimentRecord &r, const gaa::AmplificationPlan &plan,
                  std::int64_t m, std::uint64_t seed) {
    const std::size_t iterations = m < 0 ? plan.m_star() : static_cast<std::size_t>(m);
    auto result = gaa::run(plan, iterations);
    gaa::Rng rng(seed);
    const auto outcome = gaa::sample(result.final_state, rng);
    r.single_result = true;
    r.columns = {"u_tg_mag", "theta", "m_star", "m", "success", "sampled_outcome"};
    r.add_row({std::abs(plan.u_tg()), plan.theta(), static_cast<double>(plan.m_star()),
               static_cast<double>(iterations), result.success,
               static_cast<double>(outcome)});
    return result.success;
}

gaa_record *emit(gaa::ExperimentRecord r) {
    return new gaa_record{std::move(r)};
}

} // namespace

extern "C" {

const char *gaa_status_name(gaa_status status) {
    switch (status) {
    case GAA_OK:
        return "ok";
    case GAA_ERR_INVALID_ARGUMENT:
        return "invalid_argument";
    case GAA_ERR_DOMAIN:
        return "domain_error";
    case GAA_ERR_UNREACHABLE:
        return "unreachable_target";
    case GAA_ERR_DENSE_CAP:
        return "dense_cap_exceeded";
    case GAA_ERR_PARSE:
        return "parse_error";
    case GAA_ERR_INTERNAL:
        return "internal_error";
    }
    return "unknown_status";
}

const char *gaa_version(void) { return gaa::tool_version; }

// --- context ---------------------------------------------------------------

gaa_context *gaa_context_new(void) { return new (std::nothrow) gaa_context{}; }

void gaa_context_free(gaa_context *ctx) { delete ctx; }

const char *gaa_context_last_error(const gaa_context *ctx) {
    return ctx ? ctx->last_error.c_str() : "";
}

gaa_status gaa_context_set_dense_cap(gaa_context *ctx, unsigned cap) {
    return guarded(ctx, [&] {
        if (cap < 1 || cap > gaa::max_qubits) {
            throw gaa::DomainError("dense cap must be in [1, " +
                                   std::to_string(gaa::max_qubits) + "]");
        }
        ctx->dense_cap = cap;
    });
}

unsigned gaa_context_dense_cap(const gaa_context *ctx) {
    return ctx ? ctx->dense_cap : gaa::default_dense_cap;
}

// --- states ----------------------------------------------------------------

gaa_status gaa_state_new_basis(gaa_context *ctx, unsigned num_qubits, uint64_t index,
                               gaa_state **out) {
    return guarded(ctx, [&] {
        require(out, "out");
        *out = new gaa_state{gaa::basis_state(num_qubits, index)};
    });
}

void gaa_state_free(gaa_state *state) { delete state; }

unsigned gaa_state_num_qubits(const gaa_state *state) {
    return state ? state->value.num_qubits() : 0;
}

gaa_status gaa_state_amplitude(gaa_context *ctx, const gaa_state *state, uint64_t index,
                               double *re, double *im) {
    return guarded(ctx, [&] {
        require(state, "state");
        require(re, "re");
        require(im, "im");
        gaa::probability(state->value, index); // range check
        *re = state->value[index].real();
        *im = state->value[index].imag();
    });
}

gaa_status gaa_state_probability(gaa_context *ctx, const gaa_state *state,
                                 uint64_t index, double *out) {
    return guarded(ctx, [&] {
        require(state, "state");
        require(out, "out");
        *out = gaa::probability(state->value, index);
    });
}

gaa_status gaa_state_sample(gaa_context *ctx, const gaa_state *state, uint64_t seed,
                            uint64_t *out) {
    return guarded(ctx, [&] {
        require(state, "state");
        require(out, "out");
        gaa::Rng rng(seed);
        *out = gaa::sample(state->value, rng);
    });
}

// --- unitaries -------------------------------------------------------------

gaa_status gaa_unitary_walsh_hadamard(gaa_context *ctx, unsigned num_qubits,
                                      gaa_unitary **out) {
    return guarded(ctx, [&] {
        require(out, "out");
        *out = new gaa_unitary{gaa::walsh_hadamard(num_qubits)};
    });
}

gaa_status gaa_unitary_biased(gaa_context *ctx, unsigned num_qubits, double alpha,
                              gaa_unitary **out) {
    return guarded(ctx, [&] {
        require(out, "out");
        *out = new gaa_unitary{gaa::biased_transform(num_qubits, alpha)};
    });
}

gaa_status gaa_unitary_from_gate_list(gaa_context *ctx, const char *text,
                                      unsigned num_qubits, gaa_unitary **out) {
    return guarded(ctx, [&] {
        require(text, "text");
        require(out, "out");
        std::optional<unsigned> n;
        if (num_qubits > 0) {
            n = num_qubits;
        }
        *out = new gaa_unitary{gaa::parse_gate_list(text, n).to_expr()};
    });
}

gaa_status gaa_unitary_adjoint(gaa_context *ctx, const gaa_unitary *u,
                               gaa_unitary **out) {
    return guarded(ctx, [&] {
        require(u, "u");
        require(out, "out");
        *out = new gaa_unitary{gaa::adjoint(u->value)};
    });
}

void gaa_unitary_free(gaa_unitary *u) { delete u; }

unsigned gaa_unitary_num_qubits(const gaa_unitary *u) {
    return u ? u->value.num_qubits() : 0;
}

gaa_status gaa_unitary_apply(gaa_context *ctx, const gaa_unitary *u, gaa_state *state) {
    return guarded(ctx, [&] {
        require(u, "u");
        require(state, "state");
        gaa::apply(u->value, state->value);
    });
}

gaa_status gaa_unitary_transition_amplitude(gaa_context *ctx, const gaa_unitary *u,
                                            uint64_t gamma, uint64_t tau, double *re,
                                            double *im) {
    return guarded(ctx, [&] {
        require(u, "u");
        require(re, "re");
        require(im, "im");
        const auto a = gaa::transition_amplitude(u->value, gamma, tau);
        *re = a.real();
        *im = a.imag();
    });
}

// --- plans -----------------------------------------------------------------

gaa_status gaa_plan_new(gaa_context *ctx, const gaa_unitary *u, uint64_t gamma,
                        uint64_t tau, const gaa_unitary *conjugator, double phase_gamma,
                        double phase_tau, gaa_plan **out) {
    return guarded(ctx, [&] {
        require(u, "u");
        require(out, "out");
        gaa::PlanOptions opts;
        if (conjugator) {
            opts.conjugator = conjugator->value;
        }
        opts.phase_gamma = phase_gamma;
        opts.phase_tau = phase_tau;
        *out = new gaa_plan{gaa::make_plan(u->value, gamma, tau, opts)};
    });
}

void gaa_plan_free(gaa_plan *plan) { delete plan; }

double gaa_plan_u_tg_magnitude(const gaa_plan *plan) {
    return plan ? std::abs(plan->value.u_tg()) : 0.0;
}

double gaa_plan_theta(const gaa_plan *plan) { return plan ? plan->value.theta() : 0.0; }

uint64_t gaa_plan_m_star(const gaa_plan *plan) { return plan ? plan->value.m_star() : 0; }

gaa_status gaa_plan_run(gaa_context *ctx, const gaa_plan *plan, uint64_t m,
                        double *success, gaa_state **final_state) {
    return guarded(ctx, [&] {
        require(plan, "plan");
        auto r = gaa::run(plan->value, m);
        if (success) {
            *success = r.success;
        }
        if (final_state) {
            *final_state = new gaa_state{std::move(r.final_state)};
        }
    });
}

gaa_status gaa_plan_success_trace(gaa_context *ctx, const gaa_plan *plan, uint64_t m_max,
                                  double *success) {
    return guarded(ctx, [&] {
        require(plan, "plan");
        require(success, "success");
        for (const auto &p : gaa::success_trace(plan->value, m_max)) {
            success[p.m] = p.success;
        }
    });
}

// --- experiments -----------------------------------------------------------

gaa_status gaa_search_wh(gaa_context *ctx, unsigned n, uint64_t tau, int64_t m,
                         uint64_t seed, gaa_record **out) {
    return guarded(ctx, [&] {
        require(out, "out");
        gaa::ExperimentRecord r;
        r.experiment = "search-wh";
        r.params["n"] = n;
        r.params["gamma"] = 0;
        r.params["tau"] = tau;
        search_row(r, gaa::search_wh(n, tau), m, seed);
        *out = emit(std::move(r));
    });
}

gaa_status gaa_search_from(gaa_context *ctx, unsigned n, uint64_t gamma, uint64_t tau,
                           int64_t m, uint64_t seed, gaa_record **out) {
    return guarded(ctx, [&] {
        require(out, "out");
        gaa::ExperimentRecord r;
        r.experiment = "search-from";
        r.params["n"] = n;
        r.params["gamma"] = gamma;
        r.params["tau"] = tau;
        search_row(r, gaa::search_from(n, gamma, tau), m, seed);
        *out = emit(std::move(r));
    });
}

gaa_status gaa_search_near(gaa_context *ctx, unsigned n, uint64_t word, uint64_t tau,
                           unsigned k, double alpha, int64_t m, uint64_t seed,
                           gaa_record **out) {
    return guarded(ctx, [&] {
        require(out, "out");
        gaa::NearSearchSpec spec{n, word, k, std::nullopt};
        if (alpha > 0.0) {
            spec.alpha = alpha;
        }
        const auto plan = gaa::search_near(spec, tau);
        gaa::ExperimentRecord r;
        r.experiment = "search-near";
        r.params["n"] = n;
        r.params["word"] = word;
        r.params["tau"] = tau;
        r.params["k"] = k;
        r.params["alpha"] = spec.resolved_alpha();
        search_row(r, plan, m, seed);
        *out = emit(std::move(r));
    });
}

gaa_status gaa_boost(gaa_context *ctx, const char *circuit_text, unsigned num_qubits,
                     uint64_t gamma, uint64_t tau, int64_t m, uint64_t seed,
                     gaa_record **out) {
    return guarded(ctx, [&] {
        require(circuit_text, "circuit_text");
        require(out, "out");
        std::optional<unsigned> n;
        if (num_qubits > 0) {
            n = num_qubits;
        }
        const auto circuit = gaa::parse_gate_list(circuit_text, n);
        const auto plan = gaa::boost_algorithm(circuit, gamma, tau);
        const auto cmp = gaa::boost_comparison(plan);
        gaa::ExperimentRecord r;
        r.experiment = "boost";
        r.params["n"] = circuit.num_qubits();
        r.params["gamma"] = gamma;
        r.params["tau"] = tau;
        r.params["circuit_ops"] = circuit.size();
        const double success = search_row(r, plan, m, seed);
        r.summary["a_mag"] = cmp.a_mag;
        r.summary["m_star"] = cmp.m_star;
        r.summary["classical_trials"] = cmp.classical_trials;
        r.summary["predicted_success"] = gaa::predicted_success(
            plan.theta(), static_cast<std::size_t>(r.rows[0][3]));
        r.summary["success"] = success;
        *out = emit(std::move(r));
    });
}

gaa_status gaa_sweep(gaa_context *ctx, unsigned n, uint64_t gamma, uint64_t tau,
                     uint64_t m_max, gaa_record **out) {
    return guarded(ctx, [&] {
        require(out, "out");
        auto r = gaa::sweep_iterations(gaa::search_from(n, gamma, tau), m_max);
        r.params["n"] = n;
        r.params["gamma"] = gamma;
        r.params["tau"] = tau;
        r.params["m_max"] = m_max;
        *out = emit(std::move(r));
    });
}

gaa_status gaa_sensitivity(gaa_context *ctx, unsigned n, uint64_t tau,
                           const double *deltas, size_t num_deltas, unsigned trials,
                           uint64_t seed, gaa_record **out) {
    return guarded(ctx, [&] {
        require(deltas, "deltas");
        require(out, "out");
        const std::span<const double> ds(deltas, num_deltas);
        auto r = gaa::sensitivity_study(n, tau, ds, trials, seed);
        r.params["n"] = n;
        r.params["tau"] = tau;
        r.params["deltas"] = std::vector<double>(ds.begin(), ds.end());
        r.params["trials"] = trials;
        r.params["seed"] = seed;
        *out = emit(std::move(r));
    });
}

gaa_status gaa_phases(gaa_context *ctx, unsigned n, uint64_t tau, const double *phis,
                      size_t num_phis, uint64_t m_max, gaa_record **out) {
    return guarded(ctx, [&] {
        require(phis, "phis");
        require(out, "out");
        const std::span<const double> ps(phis, num_phis);
        auto r = gaa::phase_study(n, tau, ps, m_max);
        r.params["n"] = n;
        r.params["tau"] = tau;
        r.params["phis"] = std::vector<double>(ps.begin(), ps.end());
        r.params["m_max"] = m_max;
        *out = emit(std::move(r));
    });
}

gaa_status gaa_conjugator(gaa_context *ctx, unsigned n, uint64_t gamma, uint64_t tau,
                          uint64_t seed, uint64_t m_max, int identity_v,
                          gaa_record **out) {
    return guarded(ctx, [&] {
        require(out, "out");
        auto r = gaa::conjugator_study(n, gamma, tau, seed, m_max, identity_v != 0,
                                       ctx->dense_cap);
        r.params["n"] = n;
        r.params["gamma"] = gamma;
        r.params["tau"] = tau;
        r.params["seed"] = seed;
        r.params["m_max"] = m_max;
        r.params["identity_v"] = identity_v != 0;
        *out = emit(std::move(r));
    });
}

gaa_status gaa_verify(gaa_context *ctx, unsigned n, unsigned trials, uint64_t seed,
                      uint64_t m_max, gaa_record **out, int *passed) {
    return guarded(ctx, [&] {
        require(out, "out");
        auto r = gaa::verify_suite(n, trials, seed, m_max, ctx->dense_cap);
        r.params["n"] = n;
        r.params["trials"] = trials;
        r.params["seed"] = seed;
        r.params["m_max"] = m_max;
        if (passed) {
            *passed = r.summary.at("pass").get<bool>() ? 1 : 0;
        }
        *out = emit(std::move(r));
    });
}

// --- records ---------------------------------------------------------------

void gaa_record_free(gaa_record *record) { delete record; }

gaa_status gaa_record_set_param_int(gaa_context *ctx, gaa_record *record,
                                    const char *key, int64_t value) {
    return guarded(ctx, [&] {
        require(record, "record");
        require(key, "key");
        record->value.params[key] = value;
    });
}

gaa_status gaa_record_set_param_double(gaa_context *ctx, gaa_record *record,
                                       const char *key, double value) {
    return guarded(ctx, [&] {
        require(record, "record");
        require(key, "key");
        record->value.params[key] = value;
    });
}

gaa_status gaa_record_set_param_string(gaa_context *ctx, gaa_record *record,
                                       const char *key, const char *value) {
    return guarded(ctx, [&] {
        require(record, "record");
        require(key, "key");
        require(value, "value");
        record->value.params[key] = value;
    });
}

gaa_status gaa_record_set_param_doubles(gaa_context *ctx, gaa_record *record,
                                        const char *key, const double *values,
                                        size_t count) {
    return guarded(ctx, [&] {
        require(record, "record");
        require(key, "key");
        if (count > 0) {
            require(values, "values");
        }
        record->value.params[key] = std::vector<double>(values, values + count);
    });
}

gaa_status gaa_record_set_timestamp(gaa_context *ctx, gaa_record *record,
                                    const char *timestamp) {
    return guarded(ctx, [&] {
        require(record, "record");
        require(timestamp, "timestamp");
        record->value.timestamp = timestamp;
    });
}

size_t gaa_record_num_rows(const gaa_record *record) {
    return record ? record->value.rows.size() : 0;
}

size_t gaa_record_num_columns(const gaa_record *record) {
    return record ? record->value.columns.size() : 0;
}

const char *gaa_record_column_name(const gaa_record *record, size_t column) {
    if (!record || column >= record->value.columns.size()) {
        return nullptr;
    }
    return record->value.columns[column].c_str();
}

gaa_status gaa_record_value(gaa_context *ctx, const gaa_record *record, size_t row,
                            const char *column, double *out) {
    return guarded(ctx, [&] {
        require(record, "record");
        require(column, "column");
        require(out, "out");
        if (row >= record->value.rows.size()) {
            throw gaa::DomainError("row " + std::to_string(row) + " out of range");
        }
        *out = record->value.at(row, column);
    });
}

gaa_status gaa_record_serialize(gaa_context *ctx, const gaa_record *record,
                                gaa_format format, char **out) {
    return guarded(ctx, [&] {
        require(record, "record");
        require(out, "out");
        std::string text;
        switch (format) {
        case GAA_FORMAT_JSON:
            text = gaa::to_json(record->value);
            break;
        case GAA_FORMAT_TSV:
            text = gaa::to_tsv(record->value);
            break;
        default:
            throw std::invalid_argument("unknown output format");
        }
        auto *buf = new char[text.size() + 1];
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *out = buf;
    });
}

void gaa_string_free(char *s) { delete[] s; }

} // extern "C"
