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

#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gaa/amplify.hpp"

namespace gaa {

inline constexpr const char *tool_version = "gaa 1.0.0";

/// Result of one experiment: its inputs, a table of numeric columns and a
/// free-form summary. NaN in a row means "no value" (e.g. a threshold that
/// was never reached) and serializes as null / NA.
struct ExperimentRecord {
    std::string experiment;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    /// Serialize the single row as a "result" object instead of "series".
    bool single_result = false;
    std::string version = tool_version;
    std::optional<std::string> timestamp;

    void add_row(std::vector<double> row);
    [[nodiscard]] std::size_t column_index(const std::string &name) const;
    [[nodiscard]] std::vector<double> column(const std::string &name) const;
    [[nodiscard]] double at(std::size_t row, const std::string &name) const;
};

/// {experiment, params, meta, series|result, summary}.
std::string to_json(const ExperimentRecord &r, int indent = 2);

/// Header of column names, then one row per series entry; numbers use
/// 17 significant digits.
std::string to_tsv(const ExperimentRecord &r);

/// Formats a double with 17 significant digits, locale independent.
std::string format_double(double v);

/// Median of a copy of `values`; NaN when empty.
double median(std::vector<double> values);

/// Mean spacing of local maxima (quadratically interpolated) in a series;
/// nullopt with fewer than two peaks.
std::optional<double> estimate_period(std::span<const double> series);

/// Simulated vs modelled success for m = 0..m_max.
/// Columns: m, success_sim, success_model, abs_err.
ExperimentRecord sweep_iterations(const AmplificationPlan &plan, std::size_t m_max);

/// Walsh-Hadamard search from |0> with every per-qubit gate perturbed.
/// "consistent": one perturbed U' (and its exact adjoint) for the whole run,
/// with the plan recomputed for U'. "inconsistent": a fresh perturbation at
/// every application of U' and U'^-1.
/// Columns: delta, trial, u_tg_mag, m_star, success_consistent,
/// success_inconsistent.
ExperimentRecord sensitivity_study(unsigned n, BasisIndex tau,
                                   std::span<const double> deltas,
                                   unsigned trials, std::uint64_t seed);

/// Both oracle phases set to phi, Walsh-Hadamard search from |0>.
/// Columns: phi, best_m, best_success, first_m_half.
ExperimentRecord phase_study(unsigned n, BasisIndex tau, std::span<const double> phis,
                             std::size_t m_max);

/// Trace with I_tau replaced by V^-1 I_tau V against the plain plan on the
/// effective unitary V U. With `identity_v` V is the identity.
/// Columns: m, success_conjugated, success_effective, abs_diff.
ExperimentRecord conjugator_study(unsigned n, BasisIndex gamma, BasisIndex tau,
                                  std::uint64_t seed, std::size_t m_max,
                                  bool identity_v = false,
                                  unsigned dense_cap = default_dense_cap);

/// Residual suite on random dense unitaries with 2..n_max qubits:
/// Q|gamma> and Q U^-1|tau> against their two-term expansions, the two-level
/// reconstruction against full simulation up to m_max, and the distance of
/// Q^m|gamma> from span{|gamma>, U^-1|tau>}.
/// Columns: trial, n, u_tg_mag, q_gamma_residual, q_tau_residual, two_level_max_diff,
/// subspace_residual. summary.pass is true when all stay within tolerance.
ExperimentRecord verify_suite(unsigned n_max, unsigned trials, std::uint64_t seed,
                              std::size_t m_max = 200,
                              unsigned dense_cap = default_dense_cap);

inline constexpr double expansion_tolerance = 1e-10;
inline constexpr double two_level_tolerance = 1e-9;

} // namespace gaa
