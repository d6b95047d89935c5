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

#include "gaa/searches.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "gaa/errors.hpp"

namespace gaa {

AmplificationPlan search_wh(unsigned n, BasisIndex tau) {
    return make_plan(walsh_hadamard(n), 0, tau);
}

AmplificationPlan search_from(unsigned n, BasisIndex gamma, BasisIndex tau) {
    return make_plan(walsh_hadamard(n), gamma, tau);
}

void inversion_about_average(StateVector &s) {
    double re = 0.0;
    double im = 0.0;
    for (const auto &a : s.amplitudes()) {
        re += a.real();
        im += a.imag();
    }
    const double inv = 1.0 / static_cast<double>(s.size());
    const Amplitude twice_mean{2.0 * re * inv, 2.0 * im * inv};
    for (auto &a : s.amplitudes()) {
        a = twice_mean - a;
    }
}

double NearSearchSpec::resolved_alpha() const {
    if (alpha) {
        return *alpha;
    }
    if (k == 0) {
        throw DomainError("Hamming distance k must be >= 1");
    }
    return static_cast<double>(n) / static_cast<double>(k);
}

AmplificationPlan search_near(const NearSearchSpec &spec, BasisIndex tau) {
    if (spec.n < 1 || spec.n > max_qubits) {
        throw DomainError("qubit count out of range");
    }
    if (spec.k < 1 || spec.k > spec.n) {
        throw DomainError("Hamming distance k must lie in [1, n]");
    }
    const BasisIndex dim = BasisIndex{1} << spec.n;
    if (spec.known_word >= dim || tau >= dim) {
        throw DomainError("known word or target out of range");
    }
    const auto dist = static_cast<unsigned>(std::popcount(spec.known_word ^ tau));
    if (dist != spec.k) {
        throw DomainError("target is at Hamming distance " + std::to_string(dist) +
                          " from the known word, not " + std::to_string(spec.k));
    }
    const double alpha = spec.resolved_alpha();
    if (!(alpha > 1.0)) {
        throw DomainError("biased search needs alpha > 1 (k = n gives alpha = 1; "
                          "use exhaustive search instead)");
    }
    return make_plan(biased_transform(spec.n, alpha), spec.known_word, tau);
}

double near_transition_magnitude(unsigned n, unsigned k, double alpha) {
    if (!(alpha > 1.0)) {
        throw DomainError("alpha must be > 1");
    }
    if (k > n) {
        throw DomainError("k must not exceed n");
    }
    const double stay = std::pow(1.0 - 1.0 / alpha, 0.5 * static_cast<double>(n - k));
    const double flip = std::pow(1.0 / alpha, 0.5 * static_cast<double>(k));
    return stay * flip;
}

double optimal_alpha(unsigned n, unsigned k) {
    if (k < 1 || k + 1 > n) {
        throw DomainError("optimal alpha needs 1 <= k <= n-1");
    }
    return static_cast<double>(n) / static_cast<double>(k);
}

std::uint64_t binomial(unsigned n, unsigned k) {
    if (n > 64) {
        throw DomainError("binomial coefficient limited to n <= 64");
    }
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (unsigned i = 0; i < k; ++i) {
        c = c * (n - i) / (i + 1); // exact: c * (n-i) is divisible by (i+1)
    }
    return static_cast<std::uint64_t>(c);
}

double entropy_nats(double p) {
    if (p <= 0.0 || p >= 1.0) {
        return 0.0;
    }
    return -p * std::log(p) - (1.0 - p) * std::log1p(-p);
}

EntropyScaling entropy_scaling_check(unsigned n, unsigned k) {
    if (k < 2 || k + 2 > n || n > 64) {
        throw DomainError("entropy scaling check needs 2 <= k <= n-2, n <= 64");
    }
    const double nd = n;
    const double kd = k;
    const double mag = near_transition_magnitude(n, k, nd / kd);
    EntropyScaling r{};
    r.lhs = -2.0 * std::log(mag);
    r.rhs = std::log(static_cast<double>(binomial(n, k)));
    r.gap = r.lhs - r.rhs;
    r.entropy = nd * entropy_nats(kd / nd);
    r.stirling = 0.5 * std::log(2.0 * std::numbers::pi * kd * (nd - kd) / nd);
    return r;
}

AmplificationPlan boost_algorithm(const GateSequence &circuit, BasisIndex gamma,
                                  BasisIndex tau) {
    return make_plan(circuit.to_expr(), gamma, tau);
}

BoostComparison boost_comparison(const AmplificationPlan &plan) {
    const double a = std::abs(plan.u_tg());
    return {a, plan.m_star(), 1.0 / (a * a)};
}

} // namespace gaa
