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
#include <optional>

#include "gaa/amplify.hpp"
#include "gaa/circuit.hpp"

namespace gaa {

/// Exhaustive search: start at |0...0>, U = Walsh-Hadamard.
AmplificationPlan search_wh(unsigned n, BasisIndex tau);

/// Walsh-Hadamard search from an arbitrary start state.
AmplificationPlan search_from(unsigned n, BasisIndex gamma, BasisIndex tau);

/// x_i -> 2A - x_i with A the mean component, in place. Equal to
/// -W I_0 W but computed directly in O(N).
void inversion_about_average(StateVector &s);

/// Search for a word known to lie at exact Hamming distance k from
/// `known_word`.
struct NearSearchSpec {
    unsigned n = 0;
    BasisIndex known_word = 0;
    unsigned k = 1;
    std::optional<double> alpha; ///< n/k when unset

    [[nodiscard]] double resolved_alpha() const;
};

/// Start at the known word and spread with the biased transform. Throws
/// DomainError if tau is not at distance k from the known word.
AmplificationPlan search_near(const NearSearchSpec &spec, BasisIndex tau);

/// (1 - 1/alpha)^((n-k)/2) * (1/alpha)^(k/2).
double near_transition_magnitude(unsigned n, unsigned k, double alpha);

/// n/k, the alpha maximizing near_transition_magnitude. Needs 1 <= k < n.
double optimal_alpha(unsigned n, unsigned k);

/// Exact binomial coefficient, n <= 64.
std::uint64_t binomial(unsigned n, unsigned k);

/// Binary entropy in nats: -p ln p - (1-p) ln(1-p).
double entropy_nats(double p);

struct EntropyScaling {
    double lhs;       ///< -2 ln|u_tg| at alpha = n/k
    double rhs;       ///< ln C(n, k)
    double gap;       ///< lhs - rhs
    double entropy;   ///< n H(k/n), equal to lhs analytically
    double stirling;  ///< 1/2 ln(2 pi k (n-k) / n), the expected gap
};

/// Compares the iteration cost of biased search with the size of the
/// solution space. Needs 2 <= k <= n-2.
EntropyScaling entropy_scaling_check(unsigned n, unsigned k);

struct BoostComparison {
    double a_mag;              ///< |<tau|circuit|gamma>|
    std::size_t m_star;        ///< amplification iterations
    double classical_trials;   ///< expected repetitions 1/|a|^2
};

/// Amplification of an arbitrary algorithm given as a gate list. The
/// inverse is synthesized from the same list (reversed adjoints).
AmplificationPlan boost_algorithm(const GateSequence &circuit, BasisIndex gamma,
                                  BasisIndex tau);

BoostComparison boost_comparison(const AmplificationPlan &plan);

} // namespace gaa
