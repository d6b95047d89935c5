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
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "gaa/gate.hpp"
#include "gaa/rng.hpp"

namespace gaa {

/// Basis-state label. Bit j of the value is the value of qubit j, so
/// qubit 0 is the least-significant bit.
using BasisIndex = std::uint64_t;

using DenseMatrix = Eigen::MatrixXcd;

/// Largest register the simulator will allocate.
inline constexpr unsigned max_qubits = 30;

/// Amplitudes of an n-qubit register, length exactly 2^n.
class StateVector {
  public:
    /// |0...0> on `num_qubits` qubits.
    explicit StateVector(unsigned num_qubits);

    /// Takes ownership of `amps`; the length must be a power of two >= 2
    /// and every entry finite. No normalization is performed.
    static StateVector from_amplitudes(std::vector<Amplitude> amps);

    [[nodiscard]] unsigned num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }

    [[nodiscard]] std::span<Amplitude> amplitudes() noexcept { return amps_; }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept {
        return amps_;
    }

    Amplitude &operator[](BasisIndex i) noexcept { return amps_[i]; }
    const Amplitude &operator[](BasisIndex i) const noexcept { return amps_[i]; }

    [[nodiscard]] double norm_squared() const noexcept;

    /// Multiplies every amplitude by `factor`.
    void scale(Amplitude factor) noexcept;

    friend bool operator==(const StateVector &, const StateVector &) = default;

  private:
    StateVector(unsigned num_qubits, std::vector<Amplitude> amps) noexcept
        : num_qubits_(num_qubits), amps_(std::move(amps)) {}

    unsigned num_qubits_;
    std::vector<Amplitude> amps_;
};

StateVector basis_state(unsigned num_qubits, BasisIndex idx);

/// Sum of conj(a_i) * b_i.
Amplitude inner_product(const StateVector &a, const StateVector &b);

/// Largest componentwise |a_i - b_i|.
double max_abs_diff(const StateVector &a, const StateVector &b);

/// Euclidean distance ||a - b||.
double distance(const StateVector &a, const StateVector &b);

double probability(const StateVector &s, BasisIndex idx);

/// Draws a basis index with probability |amp|^2.
BasisIndex sample(const StateVector &s, Rng &rng);

/// In-place strided pass: every pair of indices differing only in bit q is
/// multiplied by the gate.
void apply_single_qubit_gate(StateVector &s, const SingleQubitGate &g,
                             unsigned qubit);

/// In-place application of gates[q] on every qubit q (a tensor product).
/// Identity entries are skipped. Low qubits are processed in cache-sized
/// blocks and high qubits in grouped passes, so the cost is a handful of
/// sweeps over the buffer rather than one per qubit.
void apply_tensor(StateVector &s, std::span<const SingleQubitGate> gates);

/// s <- m * s with a materialized 2^n x 2^n matrix.
void apply_dense(StateVector &s, const DenseMatrix &m);

/// Multiplies the amplitude of every index in `marked` by `factor`.
void multiply_marked(StateVector &s, std::span<const BasisIndex> marked,
                     Amplitude factor);

} // namespace gaa
