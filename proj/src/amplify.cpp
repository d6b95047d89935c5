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

#include "gaa/amplify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gaa/errors.hpp"

namespace gaa {

bool AmplificationPlan::uses_inversions() const noexcept {
    return phase_gamma_ == std::numbers::pi && phase_tau_ == std::numbers::pi;
}

AmplificationPlan make_plan(UnitaryExpr u, BasisIndex gamma, BasisIndex tau,
                            PlanOptions options) {
    const unsigned n = u.num_qubits();
    const BasisIndex dim = BasisIndex{1} << n;
    if (gamma >= dim || tau >= dim) {
        throw DomainError("start or target index out of range for " +
                          std::to_string(n) + " qubits");
    }
    if (!std::isfinite(options.phase_gamma) || !std::isfinite(options.phase_tau)) {
        throw DomainError("oracle phases must be finite");
    }
    UnitaryExpr effective = u;
    if (options.conjugator) {
        if (options.conjugator->num_qubits() != n) {
            throw DomainError("conjugator acts on a different number of qubits");
        }
        effective = UnitaryExpr::sequence(n, {u, *options.conjugator});
    }
    AmplificationPlan plan(std::move(u), std::move(effective));
    plan.conjugator_ = std::move(options.conjugator);
    plan.gamma_ = gamma;
    plan.tau_ = tau;
    plan.phase_gamma_ = options.phase_gamma;
    plan.phase_tau_ = options.phase_tau;
    plan.u_tg_ = transition_amplitude(plan.effective_, gamma, tau);

    const double mag = std::abs(plan.u_tg_);
    if (!(mag > unreachable_threshold)) {
        std::ostringstream os;
        os << "target " << tau << " is unreachable from " << gamma
           << " (|u_tg| = " << mag << ")";
        throw UnreachableTarget(os.str());
    }
    plan.theta_ = std::asin(std::min(mag, 1.0));
    plan.m_star_ = optimal_iterations(plan.theta_);
    return plan;
}

double predicted_success(double theta, std::size_t m) {
    const double s = std::sin((2.0 * static_cast<double>(m) + 1.0) * theta);
    return s * s;
}

std::size_t optimal_iterations(double theta) {
    if (!(theta > 0.0) || theta > std::numbers::pi / 2 + 1e-15) {
        throw DomainError("iteration angle must lie in (0, pi/2]");
    }
    const double x = std::floor(std::numbers::pi / (4.0 * theta) - 0.5);
    const auto lo = static_cast<std::size_t>(std::max(0.0, x));
    const std::size_t hi = lo + 1;
    const double p_lo = predicted_success(theta, lo);
    const double p_hi = predicted_success(theta, hi);
    return p_hi > p_lo + 1e-12 ? hi : lo;
}

void q_apply(StateVector &s, const AmplificationPlan &plan) {
    apply(plan.effective(), s);
    const BasisIndex tau = plan.tau();
    multiply_marked(s, {&tau, 1}, PhaseOracle({tau}, plan.phase_tau()).factor());
    apply_adjoint(plan.effective(), s);
    const BasisIndex gamma = plan.gamma();
    multiply_marked(s, {&gamma, 1},
                    PhaseOracle({gamma}, plan.phase_gamma()).factor());
    s.scale(-1.0);
}

RunResult run(const AmplificationPlan &plan, std::size_t m) {
    StateVector s = basis_state(plan.num_qubits(), plan.gamma());
    for (std::size_t i = 0; i < m; ++i) {
        q_apply(s, plan);
    }
    apply(plan.effective(), s);
    const double success = probability(s, plan.tau());
    return {std::move(s), success};
}

TwoLevelCoeffs two_level_step(TwoLevelCoeffs c, Amplitude u_tg) noexcept {
    const double mag2 = std::norm(u_tg);
    return {(1.0 - 4.0 * mag2) * c.a - 2.0 * std::conj(u_tg) * c.b,
            2.0 * u_tg * c.a + c.b};
}

StateVector two_level_reconstruct(TwoLevelCoeffs c, const AmplificationPlan &plan) {
    if (!plan.uses_inversions()) {
        throw DomainError("two-level model requires inversion phases");
    }
    StateVector s = basis_state(plan.num_qubits(), plan.tau());
    apply_adjoint(plan.effective(), s);
    s.scale(c.b);
    s[plan.gamma()] += c.a;
    return s;
}

std::vector<TracePoint> success_trace(const AmplificationPlan &plan,
                                      std::size_t m_max) {
    if (!plan.uses_inversions()) {
        return simulated_trace(plan, m_max);
    }
    // <tau|U (a|gamma> + b U^-1|tau>) = a u + b
    std::vector<TracePoint> out;
    out.reserve(m_max + 1);
    const Amplitude u = plan.u_tg();
    TwoLevelCoeffs c;
    for (std::size_t m = 0; m <= m_max; ++m) {
        out.push_back({m, std::min(1.0, std::norm(c.a * u + c.b))});
        c = two_level_step(c, u);
    }
    return out;
}

std::vector<TracePoint> simulated_trace(const AmplificationPlan &plan,
                                        std::size_t m_max) {
    // success(m) = |<tau|U psi_m>|^2 = |<U^dagger tau|psi_m>|^2
    StateVector probe = basis_state(plan.num_qubits(), plan.tau());
    apply_adjoint(plan.effective(), probe);
    StateVector psi = basis_state(plan.num_qubits(), plan.gamma());
    std::vector<TracePoint> out;
    out.reserve(m_max + 1);
    for (std::size_t m = 0; m <= m_max; ++m) {
        if (m > 0) {
            q_apply(psi, plan);
        }
        out.push_back({m, std::norm(inner_product(probe, psi))});
    }
    return out;
}

} // namespace gaa
