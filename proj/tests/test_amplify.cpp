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

#include <cmath>
#include <limits>
#include <numbers>

#include "gaa/amplify.hpp"
#include "gaa/errors.hpp"
#include "oracles.hpp"

using namespace gaa;
using std::numbers::pi;

namespace {

AmplificationPlan random_dense_plan(unsigned n, Rng &rng) {
    const BasisIndex dim = BasisIndex{1} << n;
    return make_plan(UnitaryExpr::dense(random_unitary_matrix(n, rng)),
                     rng.next_u64() % dim, rng.next_u64() % dim);
}

} // namespace

TEST_CASE("make_plan derived quantities") {
    SUBCASE("W, n = 2, gamma = 0, tau = 3") {
        const auto p = make_plan(walsh_hadamard(2), 0, 3);
        CHECK(std::abs(std::abs(p.u_tg()) - 0.5) < 1e-15);
        CHECK(std::abs(p.theta() - pi / 6) < 1e-15);
        CHECK(p.m_star() == 1);
        CHECK(p.uses_inversions());
    }
    SUBCASE("W, n = 10: m* = 25, confirmed by scanning m with full simulation") {
        const auto p = make_plan(walsh_hadamard(10), 0, 733);
        CHECK(std::abs(std::abs(p.u_tg()) - 0.03125) < 1e-15);
        CHECK(p.m_star() == 25);
        std::size_t best_m = 0;
        double best = -1.0;
        for (std::size_t m = 0; m <= 60; ++m) {
            const double s = run(p, m).success;
            if (s > best) {
                best = s;
                best_m = m;
            }
        }
        CHECK(best_m == 25);
    }
    SUBCASE("identity with gamma = tau is already at the target") {
        const auto p = make_plan(UnitaryExpr::identity(3), 5, 5);
        CHECK(std::abs(p.u_tg()) == 1.0);
        CHECK(p.theta() == doctest::Approx(pi / 2).epsilon(1e-15));
        CHECK(p.m_star() == 0);
    }
    SUBCASE("zero overlap is unreachable") {
        CHECK_THROWS_AS(make_plan(UnitaryExpr::identity(3), 5, 4), UnreachableTarget);
    }
    SUBCASE("index range") {
        CHECK_THROWS_AS(make_plan(walsh_hadamard(2), 4, 0), DomainError);
    }
}

TEST_CASE("m* agrees with an argmax scan on random dense unitaries") {
    Rng rng(314);
    for (int trial = 0; trial < 25; ++trial) {
        const unsigned n = 2 + trial % 4;
        const auto p = random_dense_plan(n, rng);
        const auto u = materialize(p.unitary());
        // within the first period the predicted peak is the true maximum
        const auto period = static_cast<std::size_t>(pi / (2 * p.theta()));
        const auto scanned =
            oracle::scan_best_m(u, p.gamma(), p.tau(), std::max<std::size_t>(period, 1));
        CHECK(std::abs(predicted_success(p.theta(), scanned) -
                       predicted_success(p.theta(), p.m_star())) < 1e-9);
    }
}

TEST_CASE("optimal_iterations tie-breaking and range") {
    CHECK(optimal_iterations(pi / 2) == 0); // sin^2(pi/2) == sin^2(3pi/2)
    CHECK(optimal_iterations(pi / 6) == 1);
    CHECK_THROWS_AS(optimal_iterations(0.0), DomainError);
    CHECK_THROWS_AS(optimal_iterations(2.0), DomainError);
}

TEST_CASE("q_apply") {
    SUBCASE("Q|gamma> for W, n = 2 is W|11>") {
        const auto p = make_plan(walsh_hadamard(2), 0, 3);
        auto s = basis_state(2, 0);
        q_apply(s, p);
        const auto expect = StateVector::from_amplitudes({0.5, -0.5, -0.5, 0.5});
        CHECK(max_abs_diff(s, expect) < 1e-15);
    }
    SUBCASE("zero phases leave only the overall sign") {
        PlanOptions o;
        o.phase_gamma = 0.0;
        o.phase_tau = 0.0;
        const auto p = make_plan(walsh_hadamard(3), 1, 6, o);
        Rng rng(2);
        const auto s0 = oracle::random_state(3, rng);
        auto s = s0;
        q_apply(s, p);
        for (std::size_t i = 0; i < s.size(); ++i) {
            CHECK(std::abs(s[i] + s0[i]) < 1e-15);
        }
    }
    SUBCASE("matches the explicit matrix -I_gamma U^dagger I_tau U") {
        Rng rng(71);
        for (int trial = 0; trial < 30; ++trial) {
            const unsigned n = 1 + trial % 5;
            const BasisIndex dim = BasisIndex{1} << n;
            PlanOptions o;
            if (trial % 3 == 0) {
                o.phase_gamma = rng.uniform(-pi, pi);
                o.phase_tau = rng.uniform(-pi, pi);
            }
            const auto um = random_unitary_matrix(n, rng);
            const auto p = make_plan(UnitaryExpr::dense(um), rng.next_u64() % dim,
                                     rng.next_u64() % dim, o);
            const auto s0 = oracle::random_state(n, rng);
            auto s = s0;
            q_apply(s, p);
            const oracle::Vector expect =
                oracle::q_matrix(um, p.gamma(), p.tau(), o.phase_gamma, o.phase_tau) *
                oracle::to_vector(s0);
            CHECK(oracle::max_abs(oracle::to_vector(s), expect) < 1e-12);
            CHECK(std::abs(s.norm_squared() - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("run") {
    const auto p2 = make_plan(walsh_hadamard(2), 0, 3);
    CHECK(std::abs(run(p2, 1).success - 1.0) < 1e-12);
    CHECK(std::abs(run(p2, 0).success - 0.25) < 1e-15);

    const auto p10 = make_plan(walsh_hadamard(10), 0, 733);
    CHECK(run(p10, 25).success >= 0.999);
    CHECK(std::abs(run(p10, 0).success - std::norm(p10.u_tg())) < 1e-15);
}

TEST_CASE("two_level_step") {
    const auto c1 = two_level_step({1.0, 0.0}, 0.5);
    CHECK(std::abs(c1.a) < 1e-15);
    CHECK(std::abs(c1.b - 1.0) < 1e-15);

    const auto c2 = two_level_step({0.0, 1.0}, 0.5);
    CHECK(std::abs(c2.a + 1.0) < 1e-15);
    CHECK(std::abs(c2.b - 1.0) < 1e-15);
    // |a|^2 + |b|^2 + 2 Re(conj(a) b <gamma|U^-1|tau>) with <gamma|U^-1|tau> = 1/2
    const double norm = std::norm(c2.a) + std::norm(c2.b) +
                        2.0 * (std::conj(c2.a) * c2.b * 0.5).real();
    CHECK(std::abs(norm - 1.0) < 1e-12);

    const TwoLevelCoeffs c{Amplitude{0.3, 0.1}, Amplitude{-0.2, 0.4}};
    const auto same = two_level_step(c, 0.0);
    CHECK(same.a == c.a);
    CHECK(same.b == c.b);
}

TEST_CASE("two_level_reconstruct") {
    const auto p = make_plan(walsh_hadamard(3), 2, 5);
    CHECK(two_level_reconstruct({1.0, 0.0}, p) == basis_state(3, 2));
    const auto w_tau = applied(walsh_hadamard(3), basis_state(3, 5));
    CHECK(max_abs_diff(two_level_reconstruct({0.0, 1.0}, p), w_tau) < 1e-15);

    PlanOptions o;
    o.phase_tau = 1.0;
    CHECK_THROWS_AS(two_level_reconstruct({1.0, 0.0}, make_plan(walsh_hadamard(3), 2, 5, o)),
                    DomainError);
}

TEST_CASE("two-level reconstruction equals full simulation") {
    Rng rng(2718);
    for (int trial = 0; trial < 12; ++trial) {
        const unsigned n = 2 + trial % 5;
        const auto p = random_dense_plan(n, rng);
        auto psi = basis_state(n, p.gamma());
        TwoLevelCoeffs c;
        double worst = 0.0;
        for (std::size_t m = 1; m <= 200; ++m) {
            q_apply(psi, p);
            c = two_level_step(c, p.u_tg());
            worst = std::max(worst, max_abs_diff(psi, two_level_reconstruct(c, p)));
        }
        CHECK(worst <= 1e-9);
    }
}

TEST_CASE("expansions of Q on the two spanning vectors") {
    Rng rng(1618);
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned n = 1 + trial % 6;
        const auto p = random_dense_plan(n, rng);
        const Amplitude u = p.u_tg();
        auto w = basis_state(n, p.tau());
        apply_adjoint(p.unitary(), w);

        auto qg = basis_state(n, p.gamma());
        q_apply(qg, p);
        auto expect_g = w;
        expect_g.scale(2.0 * u);
        expect_g[p.gamma()] += 1.0 - 4.0 * std::norm(u);
        CHECK(distance(qg, expect_g) <= 1e-10);

        auto qw = w;
        q_apply(qw, p);
        auto expect_w = w;
        expect_w[p.gamma()] -= 2.0 * std::conj(u);
        CHECK(distance(qw, expect_w) <= 1e-10);
    }
}

TEST_CASE("Q^m|gamma> stays in span{|gamma>, U^-1|tau>}") {
    Rng rng(4669);
    for (int trial = 0; trial < 10; ++trial) {
        const unsigned n = 2 + trial % 5;
        const auto p = random_dense_plan(n, rng);
        const oracle::Matrix um = materialize(p.unitary());
        const auto dim = static_cast<std::size_t>(um.rows());
        oracle::Matrix basis(dim, 2);
        basis.col(0) = oracle::basis(dim, p.gamma());
        basis.col(1) = um.adjoint() * oracle::basis(dim, p.tau());
        const Eigen::HouseholderQR<oracle::Matrix> qr(basis);
        const oracle::Matrix q = qr.householderQ() * oracle::Matrix::Identity(dim, 2);
        auto psi = basis_state(n, p.gamma());
        double worst = 0.0;
        for (std::size_t m = 1; m <= 100; ++m) {
            q_apply(psi, p);
            const oracle::Vector v = oracle::to_vector(psi);
            worst = std::max(worst, (v - q * (q.adjoint() * v)).norm());
        }
        CHECK(worst <= 1e-9);
    }
}

TEST_CASE("success_trace") {
    const auto p2 = make_plan(walsh_hadamard(2), 0, 3);
    const auto t = success_trace(p2, 4);
    REQUIRE(t.size() == 5);
    CHECK(std::abs(t[0].success - 0.25) < 1e-12);
    CHECK(std::abs(t[1].success - 1.0) < 1e-12);
    CHECK(std::abs(t[2].success - 0.25) < 1e-12);

    SUBCASE("recurrence agrees with full simulation") {
        Rng rng(9);
        for (int trial = 0; trial < 10; ++trial) {
            const unsigned n = 1 + trial % 6;
            const auto p = random_dense_plan(n, rng);
            const auto fast = success_trace(p, 150);
            const auto slow = simulated_trace(p, 150);
            for (std::size_t m = 0; m <= 150; ++m) {
                CHECK(std::abs(fast[m].success - slow[m].success) < 1e-9);
                CHECK(fast[m].success >= 0.0);
                CHECK(fast[m].success <= 1.0);
            }
        }
    }
    SUBCASE("peak spacing is pi / (2 theta)") {
        const auto p = make_plan(walsh_hadamard(10), 0, 1);
        const auto tr = success_trace(p, 200);
        std::vector<double> peaks;
        for (std::size_t m = 1; m + 1 < tr.size(); ++m) {
            if (tr[m].success > tr[m - 1].success && tr[m].success >= tr[m + 1].success) {
                peaks.push_back(static_cast<double>(m));
            }
        }
        REQUIRE(peaks.size() >= 2);
        const double spacing = (peaks.back() - peaks.front()) / (peaks.size() - 1);
        CHECK(std::abs(spacing - pi / (2 * p.theta())) <= 1.0);
        CHECK(std::abs(pi / (2 * p.theta()) - 50.26) < 0.01);
    }
}

TEST_CASE("predicted_success") {
    CHECK(std::abs(predicted_success(pi / 6, 1) - 1.0) < 1e-15);
    CHECK(std::abs(predicted_success(std::asin(0.3), 0) - 0.09) < 1e-15);
    Rng rng(123);
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned n = 1 + trial % 6;
        const auto p = random_dense_plan(n, rng);
        const std::size_t m = rng.next_u64() % 40;
        CHECK(std::abs(run(p, m).success - predicted_success(p.theta(), m)) < 1e-9);
    }
}

TEST_CASE("conjugated oracle equals the plain plan on V U") {
    Rng rng(2020);
    for (int trial = 0; trial < 10; ++trial) {
        const unsigned n = 1 + trial % 6;
        const BasisIndex dim = BasisIndex{1} << n;
        std::vector<SingleQubitGate> vg;
        for (unsigned q = 0; q < n; ++q) {
            vg.push_back(random_gate(rng));
        }
        const auto u = UnitaryExpr::dense(random_unitary_matrix(n, rng));
        const auto v = UnitaryExpr::tensor(vg);
        const BasisIndex g = rng.next_u64() % dim;
        const BasisIndex t = rng.next_u64() % dim;
        PlanOptions o;
        o.conjugator = v;
        const auto with_v = make_plan(u, g, t, o);
        const auto vu = make_plan(UnitaryExpr::dense(materialize(v) * materialize(u)), g, t);
        CHECK(std::abs(std::abs(with_v.u_tg()) - std::abs(vu.u_tg())) < 1e-12);
        const auto a = simulated_trace(with_v, 60);
        const auto b = simulated_trace(vu, 60);
        for (std::size_t m = 0; m <= 60; ++m) {
            CHECK(std::abs(a[m].success - b[m].success) <= 1e-10);
        }
    }
}

TEST_CASE("weaker oracle phases need at least as many iterations") {
    auto first_half = [](double phi) {
        PlanOptions o;
        o.phase_gamma = phi;
        o.phase_tau = phi;
        const auto p = make_plan(walsh_hadamard(8), 0, 77, o);
        for (const auto &pt : success_trace(p, 300)) {
            if (pt.success >= 0.5) {
                return static_cast<double>(pt.m);
            }
        }
        return std::numeric_limits<double>::infinity();
    };
    double prev = 0.0;
    for (double phi : {pi, 5 * pi / 6, 2 * pi / 3, pi / 2}) {
        const double m = first_half(phi);
        CHECK(m >= prev);
        prev = m;
    }
}
