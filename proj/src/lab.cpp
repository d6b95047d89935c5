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

#include "gaa/lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gaa/errors.hpp"
#include "gaa/searches.hpp"

namespace gaa {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

double as_double(std::size_t v) { return static_cast<double>(v); }

} // namespace

double median(std::vector<double> values) {
    if (values.empty()) {
        return nan;
    }
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) {
        return values[mid];
    }
    return 0.5 * (values[mid - 1] + values[mid]);
}

std::optional<double> estimate_period(std::span<const double> s) {
    std::vector<double> peaks;
    for (std::size_t m = 1; m + 1 < s.size(); ++m) {
        if (s[m] > s[m - 1] && s[m] >= s[m + 1]) {
            const double curvature = s[m - 1] - 2.0 * s[m] + s[m + 1];
            double offset = 0.0;
            if (curvature < 0.0) {
                offset = 0.5 * (s[m - 1] - s[m + 1]) / curvature;
            }
            peaks.push_back(static_cast<double>(m) + offset);
        }
    }
    if (peaks.size() < 2) {
        return std::nullopt;
    }
    return (peaks.back() - peaks.front()) / static_cast<double>(peaks.size() - 1);
}

ExperimentRecord sweep_iterations(const AmplificationPlan &plan, std::size_t m_max) {
    if (m_max < 1) {
        throw DomainError("sweep needs m_max >= 1");
    }
    ExperimentRecord r;
    r.experiment = "sweep";
    r.columns = {"m", "success_sim", "success_model", "abs_err"};
    const auto trace = simulated_trace(plan, m_max);
    std::vector<double> sim;
    double max_err = 0.0;
    for (const auto &p : trace) {
        const double model = predicted_success(plan.theta(), p.m);
        const double err = std::abs(p.success - model);
        max_err = std::max(max_err, err);
        sim.push_back(p.success);
        r.add_row({as_double(p.m), p.success, model, err});
    }
    r.summary["u_tg_mag"] = std::abs(plan.u_tg());
    r.summary["theta"] = plan.theta();
    r.summary["m_star"] = plan.m_star();
    r.summary["max_abs_err"] = max_err;
    r.summary["predicted_period"] = std::numbers::pi / (2.0 * plan.theta());
    if (const auto period = estimate_period(sim)) {
        r.summary["estimated_period"] = *period;
    } else {
        r.summary["estimated_period"] = nullptr;
    }
    return r;
}

namespace {

// Walsh-Hadamard layer with every gate perturbed from the stream
// (seed, trial, qubit, application).
UnitaryExpr perturbed_wh(unsigned n, double delta, std::uint64_t seed,
                         unsigned trial, std::uint64_t application) {
    std::vector<SingleQubitGate> gates;
    gates.reserve(n);
    const SingleQubitGate h = hadamard_gate();
    for (unsigned q = 0; q < n; ++q) {
        Rng rng(seed, {trial, q, application});
        gates.push_back(perturb_gate(h, delta, rng));
    }
    return UnitaryExpr::tensor(std::move(gates));
}

double inconsistent_run(unsigned n, BasisIndex tau, double delta, std::uint64_t seed,
                        unsigned trial, std::size_t m) {
    std::uint64_t application = 1; // 0 is the consistent draw
    StateVector s = basis_state(n, 0);
    const BasisIndex gamma = 0;
    for (std::size_t i = 0; i < m; ++i) {
        apply(perturbed_wh(n, delta, seed, trial, application++), s);
        multiply_marked(s, {&tau, 1}, -1.0);
        apply_adjoint(perturbed_wh(n, delta, seed, trial, application++), s);
        multiply_marked(s, {&gamma, 1}, -1.0);
        s.scale(-1.0);
    }
    apply(perturbed_wh(n, delta, seed, trial, application), s);
    return probability(s, tau);
}

} // namespace

ExperimentRecord sensitivity_study(unsigned n, BasisIndex tau,
                                   std::span<const double> deltas, unsigned trials,
                                   std::uint64_t seed) {
    if (trials < 1) {
        throw DomainError("sensitivity study needs at least one trial");
    }
    if (deltas.empty()) {
        throw DomainError("sensitivity study needs at least one delta");
    }
    ExperimentRecord r;
    r.experiment = "sensitivity";
    r.columns = {"delta", "trial", "u_tg_mag", "m_star", "success_consistent",
                 "success_inconsistent"};
    const AmplificationPlan baseline = search_wh(n, tau);
    auto by_delta = nlohmann::ordered_json::array();
    for (const double delta : deltas) {
        std::vector<double> consistent;
        std::vector<double> inconsistent;
        for (unsigned t = 0; t < trials; ++t) {
            const AmplificationPlan plan =
                make_plan(perturbed_wh(n, delta, seed, t, 0), 0, tau);
            const double ok = run(plan, plan.m_star()).success;
            const double bad = inconsistent_run(n, tau, delta, seed, t, plan.m_star());
            consistent.push_back(ok);
            inconsistent.push_back(bad);
            r.add_row({delta, static_cast<double>(t), std::abs(plan.u_tg()),
                       as_double(plan.m_star()), ok, bad});
        }
        nlohmann::ordered_json s;
        s["delta"] = delta;
        s["median_success_consistent"] = median(consistent);
        s["median_success_inconsistent"] = median(inconsistent);
        by_delta.push_back(std::move(s));
    }
    r.summary["baseline_m_star"] = baseline.m_star();
    r.summary["baseline_success"] = run(baseline, baseline.m_star()).success;
    r.summary["by_delta"] = std::move(by_delta);
    return r;
}

ExperimentRecord phase_study(unsigned n, BasisIndex tau, std::span<const double> phis,
                             std::size_t m_max) {
    if (phis.empty()) {
        throw DomainError("phase study needs at least one phase");
    }
    ExperimentRecord r;
    r.experiment = "phases";
    r.columns = {"phi", "best_m", "best_success", "first_m_half"};
    for (const double phi : phis) {
        PlanOptions opts;
        opts.phase_gamma = phi;
        opts.phase_tau = phi;
        const AmplificationPlan plan = make_plan(walsh_hadamard(n), 0, tau, opts);
        const auto trace = success_trace(plan, m_max);
        std::size_t best_m = 0;
        double best = -1.0;
        double first_half = nan;
        for (const auto &p : trace) {
            if (p.success > best) {
                best = p.success;
                best_m = p.m;
            }
            if (std::isnan(first_half) && p.success >= 0.5) {
                first_half = as_double(p.m);
            }
        }
        r.add_row({phi, as_double(best_m), best, first_half});
    }
    return r;
}

ExperimentRecord conjugator_study(unsigned n, BasisIndex gamma, BasisIndex tau,
                                  std::uint64_t seed, std::size_t m_max,
                                  bool identity_v, unsigned dense_cap) {
    std::vector<SingleQubitGate> vg(n);
    if (!identity_v) {
        for (unsigned q = 0; q < n; ++q) {
            Rng rng(seed, {q});
            vg[q] = random_gate(rng);
        }
    }
    const UnitaryExpr u = walsh_hadamard(n);
    const UnitaryExpr v = UnitaryExpr::tensor(std::move(vg));

    PlanOptions opts;
    opts.conjugator = v;
    const AmplificationPlan conjugated = make_plan(u, gamma, tau, opts);

    // V*U as a single operator: a dense product when it fits, otherwise a
    // plain two-element sequence.
    UnitaryExpr vu = n <= dense_cap
                         ? UnitaryExpr::dense(materialize(v, dense_cap) *
                                              materialize(u, dense_cap))
                         : UnitaryExpr::sequence(n, {u, v});
    const AmplificationPlan effective = make_plan(vu, gamma, tau);

    const auto a = simulated_trace(conjugated, m_max);
    const auto b = simulated_trace(effective, m_max);

    ExperimentRecord r;
    r.experiment = "conjugator";
    r.columns = {"m", "success_conjugated", "success_effective", "abs_diff"};
    double max_diff = 0.0;
    for (std::size_t m = 0; m <= m_max; ++m) {
        const double d = std::abs(a[m].success - b[m].success);
        max_diff = std::max(max_diff, d);
        r.add_row({as_double(m), a[m].success, b[m].success, d});
    }
    r.summary["max_abs_diff"] = max_diff;
    r.summary["u_tg_mag_conjugated"] = std::abs(conjugated.u_tg());
    r.summary["u_tg_mag_effective"] = std::abs(effective.u_tg());
    r.summary["m_star"] = conjugated.m_star();
    return r;
}

namespace {

double subspace_residual(const StateVector &psi, const StateVector &gamma_vec,
                         const StateVector &w) {
    // orthonormal basis {e1, e2} of span{|gamma>, w}
    StateVector e2 = w;
    const Amplitude overlap = inner_product(gamma_vec, w);
    for (std::size_t i = 0; i < e2.size(); ++i) {
        e2[i] -= overlap * gamma_vec[i];
    }
    const double len = std::sqrt(e2.norm_squared());
    const bool two_dims = len > 1e-12;
    if (two_dims) {
        e2.scale(1.0 / len);
    }
    StateVector rest = psi;
    const Amplitude c1 = inner_product(gamma_vec, psi);
    const Amplitude c2 = two_dims ? inner_product(e2, psi) : Amplitude{};
    for (std::size_t i = 0; i < rest.size(); ++i) {
        rest[i] -= c1 * gamma_vec[i] + c2 * e2[i];
    }
    return std::sqrt(rest.norm_squared());
}

} // namespace

ExperimentRecord verify_suite(unsigned n_max, unsigned trials, std::uint64_t seed,
                              std::size_t m_max, unsigned dense_cap) {
    if (n_max < 1 || trials < 1) {
        throw DomainError("verify needs n >= 1 and trials >= 1");
    }
    if (n_max > dense_cap) {
        throw DenseCapExceeded("verify uses dense unitaries; n = " +
                               std::to_string(n_max) + " exceeds the cap of " +
                               std::to_string(dense_cap));
    }
    ExperimentRecord r;
    r.experiment = "verify";
    r.columns = {"trial",        "n",           "u_tg_mag",           "q_gamma_residual",
                 "q_tau_residual", "two_level_max_diff", "subspace_residual"};
    double worst_gamma = 0.0;
    double worst_tau = 0.0;
    double worst_two = 0.0;
    double worst_sub = 0.0;
    for (unsigned t = 0; t < trials; ++t) {
        const unsigned n = n_max >= 2 ? 2 + t % (n_max - 1) : 1;
        Rng rng(seed, {t});
        const BasisIndex dim = BasisIndex{1} << n;
        std::optional<AmplificationPlan> plan;
        while (!plan) {
            UnitaryExpr u = UnitaryExpr::dense(random_unitary_matrix(n, rng, dense_cap));
            const BasisIndex gamma = rng.next_u64() % dim;
            const BasisIndex tau = rng.next_u64() % dim;
            try {
                plan = make_plan(std::move(u), gamma, tau);
            } catch (const UnreachableTarget &) {
            }
        }
        const Amplitude u_tg = plan->u_tg();
        const StateVector gamma_vec = basis_state(n, plan->gamma());
        StateVector w = basis_state(n, plan->tau());
        apply_adjoint(plan->unitary(), w);

        // Q|gamma> = (1 - 4|u|^2)|gamma> + 2u U^-1|tau>
        StateVector q_gamma = gamma_vec;
        q_apply(q_gamma, *plan);
        StateVector expect3 = w;
        expect3.scale(2.0 * u_tg);
        expect3[plan->gamma()] += 1.0 - 4.0 * std::norm(u_tg);
        const double res3 = distance(q_gamma, expect3);

        // Q U^-1|tau> = U^-1|tau> - 2 conj(u)|gamma>
        StateVector q_w = w;
        q_apply(q_w, *plan);
        StateVector expect5 = w;
        expect5[plan->gamma()] -= 2.0 * std::conj(u_tg);
        const double res5 = distance(q_w, expect5);

        StateVector psi = gamma_vec;
        TwoLevelCoeffs c;
        double two = 0.0;
        double sub = 0.0;
        for (std::size_t m = 1; m <= m_max; ++m) {
            q_apply(psi, *plan);
            c = two_level_step(c, u_tg);
            two = std::max(two, max_abs_diff(psi, two_level_reconstruct(c, *plan)));
            sub = std::max(sub, subspace_residual(psi, gamma_vec, w));
        }
        worst_gamma = std::max(worst_gamma, res3);
        worst_tau = std::max(worst_tau, res5);
        worst_two = std::max(worst_two, two);
        worst_sub = std::max(worst_sub, sub);
        r.add_row({static_cast<double>(t), static_cast<double>(n), std::abs(u_tg), res3,
                   res5, two, sub});
    }
    r.summary["max_q_gamma_residual"] = worst_gamma;
    r.summary["max_q_tau_residual"] = worst_tau;
    r.summary["max_two_level_diff"] = worst_two;
    r.summary["max_subspace_residual"] = worst_sub;
    r.summary["pass"] = worst_gamma <= expansion_tolerance &&
                        worst_tau <= expansion_tolerance &&
                        worst_two <= two_level_tolerance &&
                        worst_sub <= two_level_tolerance;
    return r;
}

} // namespace gaa
