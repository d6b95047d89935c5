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

#include <doctest.h>

#include <bit>
#include <cmath>
#include <numbers>

#include "gaa/errors.hpp"
#include "gaa/searches.hpp"
#include "oracles.hpp"

using namespace gaa;
using std::numbers::pi;

TEST_CASE("search_wh") {
    const auto p = search_wh(4, 11);
    CHECK(std::abs(std::abs(p.u_tg()) - 0.25) < 1e-15);
    CHECK(p.m_star() == 3);
    const double expect = std::pow(std::sin(7 * std::asin(0.25)), 2);
    CHECK(std::abs(run(p, 3).success - expect) < 1e-12);
    CHECK(expect == doctest::Approx(0.9613).epsilon(1e-4));
}

TEST_CASE("iteration count grows as sqrt(N)") {
    for (unsigned n : {8u, 10u, 12u, 14u}) {
        const auto p = search_wh(n, (BasisIndex{1} << n) - 3);
        const double ratio = static_cast<double>(p.m_star()) / std::sqrt(std::ldexp(1.0, n));
        CHECK(ratio >= 0.7);
        CHECK(ratio <= 0.8);
    }
}

TEST_CASE("inversion_about_average") {
    SUBCASE("small example") {
        auto s = StateVector::from_amplitudes({0.5, 0.5, 0.5, 0.5});
        s[0] = -0.5;
        inversion_about_average(s);
        const auto expect = StateVector::from_amplitudes({1.0, 0.0, 0.0, 0.0});
        CHECK(max_abs_diff(s, expect) < 1e-15);
    }
    SUBCASE("uniform state is fixed") {
        auto s = applied(walsh_hadamard(5), basis_state(5, 0));
        const auto before = s;
        inversion_about_average(s);
        CHECK(max_abs_diff(s, before) < 1e-15);
    }
    SUBCASE("equals -W I_0 W and 2A - x") {
        Rng rng(55);
        for (int trial = 0; trial < 100; ++trial) {
            const unsigned n = 1 + trial % 10;
            const auto s0 = oracle::random_state(n, rng);

            Amplitude mean = 0.0;
            for (std::size_t i = 0; i < s0.size(); ++i) {
                mean += s0[i];
            }
            mean /= static_cast<double>(s0.size());
            oracle::Vector direct = oracle::to_vector(s0);
            for (auto &x : direct) {
                x = 2.0 * mean - x;
            }

            auto via_ops = s0;
            apply(walsh_hadamard(n), via_ops);
            selective_phase(via_ops, PhaseOracle({0}));
            apply(walsh_hadamard(n), via_ops);
            via_ops.scale(-1.0);

            auto fast = s0;
            inversion_about_average(fast);
            CHECK((oracle::to_vector(via_ops) - direct).norm() <= 1e-12);
            CHECK((oracle::to_vector(fast) - direct).norm() <= 1e-12);

            inversion_about_average(fast);
            CHECK(max_abs_diff(fast, s0) < 1e-12);
        }
    }
}

TEST_CASE("search_from") {
    const auto p = search_from(6, 17, 42);
    CHECK(std::abs(std::abs(p.u_tg()) - 0.125) < 1e-15);
    Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const BasisIndex g = rng.next_u64() % 256;
        const BasisIndex t = rng.next_u64() % 256;
        const auto q = search_from(8, g, t);
        CHECK(run(q, q.m_star()).success >= 0.995);
    }
}

TEST_CASE("biased gate search near a known word") {
    SUBCASE("n = 8, k = 2") {
        const NearSearchSpec spec{8, 0b10110100, 2, std::nullopt};
        CHECK(spec.resolved_alpha() == 4.0);
        const BasisIndex tau = 0b10110100 ^ 0b00100010;
        const auto p = search_near(spec, tau);
        CHECK(std::abs(std::abs(p.u_tg()) - 0.10546875) < 1e-12);
        CHECK(std::abs(near_transition_magnitude(8, 2, 4.0) - 0.10546875) < 1e-15);
        CHECK(p.m_star() == 7);
        const oracle::Matrix um = materialize(p.unitary());
        CHECK(predicted_success(p.theta(), oracle::scan_best_m(um, p.gamma(), tau, 14)) ==
              doctest::Approx(predicted_success(p.theta(), 7)).epsilon(1e-12));
        CHECK(run(p, 7).success >= 0.999);
    }
    SUBCASE("alpha = 2 is the Walsh-Hadamard case") {
        const NearSearchSpec spec{6, 0, 3, 2.0};
        const auto p = search_near(spec, 0b000111);
        CHECK(std::abs(std::abs(p.u_tg()) - 0.125) < 1e-15);
    }
    SUBCASE("distance mismatch") {
        const NearSearchSpec spec{8, 0, 2, std::nullopt};
        CHECK_THROWS_AS(search_near(spec, 0b111), DomainError);
    }
    SUBCASE("k = n leaves no valid alpha") {
        const NearSearchSpec spec{4, 0, 4, std::nullopt};
        CHECK_THROWS_AS(search_near(spec, 0b1111), DomainError);
    }
    SUBCASE("n = 20, k = 5 needs about sqrt(C(n, k)) iterations") {
        const NearSearchSpec spec{20, 0, 5, std::nullopt};
        const auto p = search_near(spec, 0b11111);
        const double ratio = p.m_star() / std::sqrt(static_cast<double>(binomial(20, 5)));
        CHECK(ratio >= 0.5);
        CHECK(ratio <= 2.2);
    }
    SUBCASE("flipping the known word and target together changes nothing") {
        Rng rng(6);
        for (int trial = 0; trial < 10; ++trial) {
            const BasisIndex w = rng.next_u64() % 128;
            const BasisIndex mask = rng.next_u64() % 128;
            BasisIndex flip = 0;
            while (std::popcount(flip) != 3) {
                flip = rng.next_u64() % 128;
            }
            const auto a = search_near({7, w, 3, std::nullopt}, w ^ flip);
            const auto b = search_near({7, w ^ mask, 3, std::nullopt}, w ^ mask ^ flip);
            CHECK(std::abs(std::abs(a.u_tg()) - std::abs(b.u_tg())) < 1e-14);
            CHECK(a.m_star() == b.m_star());
        }
    }
}

TEST_CASE("optimal_alpha maximizes the transition magnitude") {
    CHECK(optimal_alpha(8, 2) == 4.0);
    double best_alpha = 0.0;
    double best = -1.0;
    for (int i = 1; i <= 150; ++i) {
        const double alpha = 1.0 + 0.1 * i;
        const double v = near_transition_magnitude(8, 2, alpha);
        if (v > best) {
            best = v;
            best_alpha = alpha;
        }
    }
    CHECK(std::abs(best_alpha - 4.0) < 1e-9);

    for (auto [n, k] : {std::pair{8u, 2u}, {20u, 5u}, {12u, 7u}}) {
        const double a = optimal_alpha(n, k);
        const double h = 1e-5;
        const double d = (near_transition_magnitude(n, k, a + h) -
                          near_transition_magnitude(n, k, a - h)) / (2 * h);
        CHECK(std::abs(d) <= 1e-6);
    }
    CHECK_THROWS_AS(optimal_alpha(8, 0), DomainError);
    CHECK_THROWS_AS(optimal_alpha(8, 8), DomainError);
}

TEST_CASE("binomial and entropy") {
    CHECK(binomial(8, 2) == 28);
    CHECK(binomial(20, 5) == 15504);
    CHECK(binomial(64, 32) == 1832624140942590534ULL);
    CHECK(binomial(5, 7) == 0);
    CHECK(entropy_nats(0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(entropy_nats(0.0) == 0.0);
}

TEST_CASE("entropy_scaling_check") {
    for (auto [n, k] : {std::pair{20u, 5u}, {30u, 6u}, {32u, 8u}, {20u, 10u}}) {
        const auto e = entropy_scaling_check(n, k);
        CHECK(std::abs(e.lhs - e.entropy) <= 1e-9);
        CHECK(std::abs(e.gap - e.stirling) <= 0.2);
        CHECK(std::abs(e.rhs - std::log(static_cast<double>(binomial(n, k)))) < 1e-9);
    }
    // the gap grows only logarithmically
    double prev = 0.0;
    for (unsigned n : {16u, 24u, 32u}) {
        const auto e = entropy_scaling_check(n, n / 4);
        CHECK(e.gap > prev);
        CHECK(e.gap / e.rhs < 0.3);
        prev = e.gap;
    }
    CHECK_THROWS_AS(entropy_scaling_check(10, 1), DomainError);
}

TEST_CASE("boosting a gate-list algorithm") {
    SUBCASE("a layer of Hadamards reproduces Walsh-Hadamard search") {
        const auto seq = parse_gate_list("H 0\nH 1\nH 2\n");
        const auto p = boost_algorithm(seq, 0, 5);
        const auto ref = search_wh(3, 5);
        CHECK(p.m_star() == ref.m_star());
        CHECK(std::abs(p.theta() - ref.theta()) < 1e-15);
        CHECK(std::abs(run(p, p.m_star()).success - run(ref, ref.m_star()).success) < 1e-12);
    }
    SUBCASE("random circuits follow the sinusoid") {
        Rng rng(33);
        int done = 0;
        while (done < 20) {
            std::vector<GateSequence::Op> ops;
            for (int i = 0; i < 12; ++i) {
                ops.emplace_back(GateOp{static_cast<unsigned>(rng.next_u64() % 3),
                                        random_gate(rng)});
            }
            const GateSequence seq(3, std::move(ops));
            const BasisIndex g = rng.next_u64() % 8;
            const BasisIndex t = rng.next_u64() % 8;
            const auto expr = seq.to_expr();
            if (std::abs(transition_amplitude(expr, g, t)) < 1e-6) {
                continue;
            }
            const auto p = boost_algorithm(seq, g, t);
            const auto cmp = boost_comparison(p);
            const double model =
                std::pow(std::sin((2.0 * cmp.m_star + 1.0) * std::asin(cmp.a_mag)), 2);
            CHECK(std::abs(run(p, cmp.m_star).success - model) <= 1e-6);
            CHECK(cmp.classical_trials == doctest::Approx(1.0 / (cmp.a_mag * cmp.a_mag)));
            ++done;
        }
    }
    SUBCASE("quadratic advantage") {
        const auto cmp = boost_comparison(search_wh(10, 3));
        CHECK(cmp.classical_trials == doctest::Approx(1024.0));
        CHECK(cmp.m_star == 25);
    }
}
