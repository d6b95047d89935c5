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

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gaa/unitaries.hpp"

namespace gaa {

struct GateOp {
    unsigned qubit;
    SingleQubitGate gate;
};

/// An algorithm given as elementary unitaries Q_1 Q_2 ... Q_eta, applied in
/// list order.
class GateSequence {
  public:
    using Op = std::variant<GateOp, PhaseOracle>;

    GateSequence(unsigned num_qubits, std::vector<Op> ops);

    [[nodiscard]] unsigned num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] const std::vector<Op> &ops() const noexcept { return ops_; }
    [[nodiscard]] std::size_t size() const noexcept { return ops_.size(); }

    /// Seq expression. Consecutive gate ops are packed into per-qubit tensor
    /// layers; nothing is ever materialized densely.
    [[nodiscard]] UnitaryExpr to_expr() const;

  private:
    unsigned num_qubits_;
    std::vector<Op> ops_;
};

/// Parses the line-oriented gate-list format:
///
///     H q
///     GATE q a b c d e f g h     # row-major 2x2, (re, im) per entry
///     BIAS q alpha
///     PHASE idx... : phi
///
/// '#' starts a comment. When `num_qubits` is not given it is inferred from
/// the largest qubit and oracle index referenced.
GateSequence parse_gate_list(std::string_view text,
                             std::optional<unsigned> num_qubits = std::nullopt);

/// Inverse of parse_gate_list; every gate is written as GATE with 17
/// significant digits so the round trip is exact.
std::string format_gate_list(const GateSequence &seq);

/// Decimal or 0b-prefixed binary basis index.
BasisIndex parse_basis_index(std::string_view token);

} // namespace gaa
