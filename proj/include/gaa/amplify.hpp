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

#include <cstddef>
#include <numbers>
#include <optional>
#include <vector>

#include "gaa/qstate.hpp"
#include "gaa/unitaries.hpp"

namespace gaa {

/// Transition amplitudes below this magnitude are treated as zero.
inline constexpr double unreachable_threshold = 1e-14;

struct PlanOptions {
    /// V in -I_gamma U^-1 V^-1 I_tau V U; the effective unitary becomes V*U.
    std::optional<UnitaryExpr> conjugator;
    double phase_gamma = std::numbers::pi;
    double phase_tau = std::numbers::pi;
};

/// Everything needed to iterate Q = -I_gamma U^-1 I_tau U from |gamma>
/// toward |tau>, plus the derived transition amplitude, angle and the
/// iteration count m* that maximizes the predicted success.
class AmplificationPlan {
  public:
    [[nodiscard]] unsigned num_qubits() const noexcept { return u_.num_qubits(); }
    [[nodiscard]] const UnitaryExpr &unitary() const noexcept { return u_; }
    /// V*U when a conjugator is present, U otherwise.
    [[nodiscard]] const UnitaryExpr &effective() const noexcept { return effective_; }
    [[nodiscard]] const std::optional<UnitaryExpr> &conjugator() const noexcept {
        return conjugator_;
    }
    [[nodiscard]] BasisIndex gamma() const noexcept { return gamma_; }
    [[nodiscard]] BasisIndex tau() const noexcept { return tau_; }
    [[nodiscard]] double phase_gamma() const noexcept { return phase_gamma_; }
    [[nodiscard]] double phase_tau() const noexcept { return phase_tau_; }
    /// Both oracle phases equal pi (true selective inversions).
    [[nodiscard]] bool uses_inversions() const noexcept;

    /// <tau| effective |gamma>.
    [[nodiscard]] Amplitude u_tg() const noexcept { return u_tg_; }
    /// arcsin |u_tg|, in (0, pi/2].
    [[nodiscard]] double theta() const noexcept { return theta_; }
    [[nodiscard]] std::size_t m_star() const noexcept { return m_star_; }

  private:
    friend AmplificationPlan make_plan(UnitaryExpr, BasisIndex, BasisIndex,
                                       PlanOptions);
    AmplificationPlan(UnitaryExpr u, UnitaryExpr effective)
        : u_(std::move(u)), effective_(std::move(effective)) {}

    UnitaryExpr u_;
    UnitaryExpr effective_;
    std::optional<UnitaryExpr> conjugator_;
    BasisIndex gamma_ = 0;
    BasisIndex tau_ = 0;
    double phase_gamma_ = std::numbers::pi;
    double phase_tau_ = std::numbers::pi;
    Amplitude u_tg_{};
    double theta_ = 0.0;
    std::size_t m_star_ = 0;
};

/// Throws UnreachableTarget when |u_tg| <= unreachable_threshold.
AmplificationPlan make_plan(UnitaryExpr u, BasisIndex gamma, BasisIndex tau,
                            PlanOptions options = {});

/// The count m maximizing sin^2((2m+1) theta) among floor(pi/(4 theta) - 1/2)
/// and its successor; ties (within 1e-12) go to the smaller count.
std::size_t optimal_iterations(double theta);

/// sin^2((2m+1) theta).
double predicted_success(double theta, std::size_t m);

/// One application of Q, in place: effective U, phase at tau, effective
/// U^dagger, phase at gamma, then the overall factor -1.
void q_apply(StateVector &s, const AmplificationPlan &plan);

struct RunResult {
    StateVector final_state;
    double success;
};

/// Effective U applied to Q^m |gamma>; success is the probability at tau.
RunResult run(const AmplificationPlan &plan, std::size_t m);

/// Coefficients of a|gamma> + b U^-1|tau>. The two basis vectors are not
/// orthogonal: <gamma|U^-1|tau> = conj(u_tg).
struct TwoLevelCoeffs {
    Amplitude a{1.0};
    Amplitude b{};
};

/// Q restricted to span{|gamma>, U^-1|tau>} for inversion phases:
///   a' = (1 - 4|u|^2) a - 2 conj(u) b
///   b' = 2 u a + b
TwoLevelCoeffs two_level_step(TwoLevelCoeffs c, Amplitude u_tg) noexcept;

/// a|gamma> + b U^-1|tau> as a full state. Requires inversion phases.
StateVector two_level_reconstruct(TwoLevelCoeffs c, const AmplificationPlan &plan);

struct TracePoint {
    std::size_t m;
    double success;
};

/// Success after m = 0..m_max iterations. Uses the two-level recurrence
/// for inversion phases and full simulation otherwise.
std::vector<TracePoint> success_trace(const AmplificationPlan &plan,
                                      std::size_t m_max);

/// Same as success_trace but always by full state-vector simulation.
std::vector<TracePoint> simulated_trace(const AmplificationPlan &plan,
                                        std::size_t m_max);

} // namespace gaa
