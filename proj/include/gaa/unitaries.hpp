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

#include <functional>
#include <memory>
#include <numbers>
#include <span>
#include <vector>

#include "gaa/gate.hpp"
#include "gaa/qstate.hpp"
#include "gaa/rng.hpp"

namespace gaa {

/// Dense materialization is refused above this many qubits unless the
/// caller raises the cap (2^12 x 2^12 complex doubles is 256 MiB).
inline constexpr unsigned default_dense_cap = 12;

/// Selective phase rotation: marked amplitudes are multiplied by
/// e^{i*phase}, everything else is left alone. With the default phase of pi
/// this is the inversion I_x.
class PhaseOracle {
  public:
    explicit PhaseOracle(std::vector<BasisIndex> marked,
                         double phase = std::numbers::pi);

    [[nodiscard]] std::span<const BasisIndex> marked() const noexcept {
        return marked_;
    }
    [[nodiscard]] double phase() const noexcept { return phase_; }

    /// e^{i*phase}; exactly -1 for pi and exactly 1 for 0.
    [[nodiscard]] Amplitude factor() const noexcept;

    [[nodiscard]] PhaseOracle adjoint() const {
        return PhaseOracle(marked_, -phase_);
    }

  private:
    std::vector<BasisIndex> marked_; // sorted, unique
    double phase_;
};

/// Symbolic unitary on a fixed number of qubits.
///
/// A tree of Dense, TensorPerQubit, Seq, Adjoint and OraclePhase nodes.
/// Values are immutable and cheap to copy (nodes are shared). Seq members
/// act left to right: the first element is applied first.
class UnitaryExpr {
  public:
    enum class Kind { Dense, TensorPerQubit, Seq, Adjoint, OraclePhase };

    struct Node;

    /// Checks that m is square with power-of-two dimension and unitary to
    /// within `tolerance`.
    static UnitaryExpr dense(DenseMatrix m, double tolerance = 1e-8);
    static UnitaryExpr tensor(std::vector<SingleQubitGate> gates);
    /// `gate` on one qubit, identity elsewhere.
    static UnitaryExpr single(unsigned num_qubits, unsigned qubit,
                              const SingleQubitGate &gate);
    static UnitaryExpr sequence(unsigned num_qubits,
                                std::vector<UnitaryExpr> items);
    static UnitaryExpr identity(unsigned num_qubits) {
        return sequence(num_qubits, {});
    }
    static UnitaryExpr oracle(unsigned num_qubits, PhaseOracle o);
    /// Unevaluated adjoint node; see also gaa::adjoint, which rewrites.
    static UnitaryExpr adjoint_of(UnitaryExpr inner);

    [[nodiscard]] unsigned num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] Kind kind() const noexcept;

    /// Only valid for the matching kind.
    [[nodiscard]] const DenseMatrix &dense_matrix() const;
    [[nodiscard]] std::span<const SingleQubitGate> gates() const;
    [[nodiscard]] std::span<const UnitaryExpr> items() const;
    [[nodiscard]] const UnitaryExpr &inner() const;
    [[nodiscard]] const PhaseOracle &phase_oracle() const;

    /// True if the tree contains a Dense node.
    [[nodiscard]] bool contains_dense() const;

  private:
    UnitaryExpr(unsigned n, std::shared_ptr<const Node> node) noexcept
        : num_qubits_(n), node_(std::move(node)) {}

    unsigned num_qubits_;
    std::shared_ptr<const Node> node_;
};

SingleQubitGate hadamard_gate();

/// [[sqrt(1-1/a), 1/sqrt(a)], [1/sqrt(a), -sqrt(1-1/a)]]; alpha = 2 gives
/// the Hadamard gate. Requires alpha > 1.
SingleQubitGate biased_gate(double alpha);

/// Hadamard on each of n qubits.
UnitaryExpr walsh_hadamard(unsigned n);

/// biased_gate(alpha) on each of n qubits.
UnitaryExpr biased_transform(unsigned n, double alpha);

/// Structural adjoint: Seq is reversed with each member adjointed,
/// TensorPerQubit adjoints each gate, Dense is conjugate-transposed,
/// oracles negate their phase, and Adjoint(X) unwraps to X.
UnitaryExpr adjoint(const UnitaryExpr &u);

/// s <- u s, in place, using the cheapest kernel for each node.
void apply(const UnitaryExpr &u, StateVector &s);

/// s <- u^dagger s, in place, without building the adjoint expression.
void apply_adjoint(const UnitaryExpr &u, StateVector &s);

/// Copying convenience wrapper around apply.
[[nodiscard]] StateVector applied(const UnitaryExpr &u, StateVector s);

/// 2^n x 2^n matrix of u, column j = u|j>.
DenseMatrix materialize(const UnitaryExpr &u,
                        unsigned dense_cap = default_dense_cap);

/// Marked amplitudes times e^{i*phase}, in place.
void selective_phase(StateVector &s, const PhaseOracle &o);

/// Reversible-evaluation oracle with the ancilla as the most significant
/// qubit: |b, x> -> |b XOR f(x), x> for an (n+1)-qubit state.
void ancilla_oracle_apply(StateVector &s,
                          const std::function<bool(BasisIndex)> &f);

/// <tau| u |gamma>.
Amplitude transition_amplitude(const UnitaryExpr &u, BasisIndex gamma,
                               BasisIndex tau);

/// R1 * g * R2 with R1, R2 rotations about uniformly random Bloch axes by
/// angles uniform in [-delta, delta]. Exactly a product of unitaries.
SingleQubitGate perturb_gate(const SingleQubitGate &g, double delta, Rng &rng);

/// Haar-random single-qubit unitary.
SingleQubitGate random_gate(Rng &rng);

/// Haar-random dense unitary on n qubits (QR of a complex Ginibre matrix).
DenseMatrix random_unitary_matrix(unsigned n, Rng &rng,
                                  unsigned dense_cap = default_dense_cap);

/// Largest |(m^dagger m - I)_ij|.
double unitarity_defect(const DenseMatrix &m);

} // namespace gaa
