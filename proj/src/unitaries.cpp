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

#include "gaa/unitaries.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <variant>

#include "gaa/errors.hpp"

namespace gaa {

struct DenseNode {
    DenseMatrix m;
};
struct TensorNode {
    std::vector<SingleQubitGate> gates;
};
struct SeqNode {
    std::vector<UnitaryExpr> items;
};
struct AdjointNode {
    UnitaryExpr inner;
};
struct OracleNode {
    PhaseOracle oracle;
};

struct UnitaryExpr::Node {
    std::variant<DenseNode, TensorNode, SeqNode, AdjointNode, OracleNode> v;
};

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

template <class T> const T &node_as(const UnitaryExpr::Node &n, const char *what) {
    if (const auto *p = std::get_if<T>(&n.v)) {
        return *p;
    }
    throw DomainError(std::string("unitary expression is not ") + what);
}

unsigned qubits_for_dimension(Eigen::Index dim) {
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        throw DomainError("dense unitary dimension must be a power of two >= 2");
    }
    unsigned n = 0;
    while ((Eigen::Index{1} << n) < dim) {
        ++n;
    }
    return n;
}

} // namespace

// --- PhaseOracle -----------------------------------------------------------

PhaseOracle::PhaseOracle(std::vector<BasisIndex> marked, double phase)
    : marked_(std::move(marked)), phase_(phase) {
    if (!std::isfinite(phase)) {
        throw DomainError("oracle phase must be finite");
    }
    std::sort(marked_.begin(), marked_.end());
    marked_.erase(std::unique(marked_.begin(), marked_.end()), marked_.end());
}

Amplitude PhaseOracle::factor() const noexcept {
    if (phase_ == 0.0) {
        return 1.0;
    }
    if (phase_ == std::numbers::pi || phase_ == -std::numbers::pi) {
        return -1.0;
    }
    return std::polar(1.0, phase_);
}

// --- UnitaryExpr -----------------------------------------------------------

double unitarity_defect(const DenseMatrix &m) {
    if (m.rows() != m.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    const DenseMatrix d =
        m.adjoint() * m - DenseMatrix::Identity(m.rows(), m.cols());
    return d.cwiseAbs().maxCoeff();
}

UnitaryExpr UnitaryExpr::dense(DenseMatrix m, double tolerance) {
    if (m.rows() != m.cols()) {
        throw DomainError("dense unitary must be square");
    }
    const unsigned n = qubits_for_dimension(m.rows());
    if (!m.allFinite()) {
        throw DomainError("dense unitary has non-finite entries");
    }
    const double defect = unitarity_defect(m);
    if (!(defect <= tolerance)) {
        std::ostringstream os;
        os << "dense matrix is not unitary (|M^dagger M - I| = " << defect << ")";
        throw DomainError(os.str());
    }
    return {n, std::make_shared<const Node>(Node{DenseNode{std::move(m)}})};
}

UnitaryExpr UnitaryExpr::tensor(std::vector<SingleQubitGate> gates) {
    if (gates.empty() || gates.size() > max_qubits) {
        throw DomainError("tensor product needs between 1 and " +
                          std::to_string(max_qubits) + " gates");
    }
    const auto n = static_cast<unsigned>(gates.size());
    return {n, std::make_shared<const Node>(Node{TensorNode{std::move(gates)}})};
}

UnitaryExpr UnitaryExpr::single(unsigned num_qubits, unsigned qubit,
                                const SingleQubitGate &gate) {
    if (qubit >= num_qubits) {
        throw DomainError("qubit " + std::to_string(qubit) + " out of range for " +
                          std::to_string(num_qubits) + " qubits");
    }
    std::vector<SingleQubitGate> gates(num_qubits);
    gates[qubit] = gate;
    return tensor(std::move(gates));
}

UnitaryExpr UnitaryExpr::sequence(unsigned num_qubits,
                                  std::vector<UnitaryExpr> items) {
    if (num_qubits < 1 || num_qubits > max_qubits) {
        throw DomainError("sequence qubit count out of range");
    }
    for (const auto &it : items) {
        if (it.num_qubits() != num_qubits) {
            throw DomainError("sequence member acts on " +
                              std::to_string(it.num_qubits()) + " qubits, expected " +
                              std::to_string(num_qubits));
        }
    }
    return {num_qubits,
            std::make_shared<const Node>(Node{SeqNode{std::move(items)}})};
}

UnitaryExpr UnitaryExpr::oracle(unsigned num_qubits, PhaseOracle o) {
    if (num_qubits < 1 || num_qubits > max_qubits) {
        throw DomainError("oracle qubit count out of range");
    }
    const BasisIndex dim = BasisIndex{1} << num_qubits;
    for (auto idx : o.marked()) {
        if (idx >= dim) {
            throw DomainError("oracle marks index " + std::to_string(idx) +
                              " outside " + std::to_string(num_qubits) + " qubits");
        }
    }
    return {num_qubits,
            std::make_shared<const Node>(Node{OracleNode{std::move(o)}})};
}

UnitaryExpr UnitaryExpr::adjoint_of(UnitaryExpr inner) {
    const unsigned n = inner.num_qubits();
    return {n, std::make_shared<const Node>(Node{AdjointNode{std::move(inner)}})};
}

UnitaryExpr::Kind UnitaryExpr::kind() const noexcept {
    return static_cast<Kind>(node_->v.index());
}

const DenseMatrix &UnitaryExpr::dense_matrix() const {
    return node_as<DenseNode>(*node_, "dense").m;
}
std::span<const SingleQubitGate> UnitaryExpr::gates() const {
    return node_as<TensorNode>(*node_, "a tensor product").gates;
}
std::span<const UnitaryExpr> UnitaryExpr::items() const {
    return node_as<SeqNode>(*node_, "a sequence").items;
}
const UnitaryExpr &UnitaryExpr::inner() const {
    return node_as<AdjointNode>(*node_, "an adjoint").inner;
}
const PhaseOracle &UnitaryExpr::phase_oracle() const {
    return node_as<OracleNode>(*node_, "an oracle").oracle;
}

bool UnitaryExpr::contains_dense() const {
    return std::visit(overloaded{
                          [](const DenseNode &) { return true; },
                          [](const TensorNode &) { return false; },
                          [](const SeqNode &s) {
                              return std::any_of(
                                  s.items.begin(), s.items.end(),
                                  [](const auto &e) { return e.contains_dense(); });
                          },
                          [](const AdjointNode &a) { return a.inner.contains_dense(); },
                          [](const OracleNode &) { return false; },
                      },
                      node_->v);
}

// --- Gates -------------------------------------------------------------------

SingleQubitGate hadamard_gate() {
    const double h = std::numbers::sqrt2 / 2.0;
    return SingleQubitGate({h, h, h, -h});
}

SingleQubitGate biased_gate(double alpha) {
    if (!(alpha > 1.0) || !std::isfinite(alpha)) {
        throw DomainError("biased gate requires alpha > 1");
    }
    // alpha == 2 must reproduce hadamard_gate() bit for bit.
    if (alpha == 2.0) {
        return hadamard_gate();
    }
    const double off = std::sqrt(1.0 / alpha);
    const double diag = std::sqrt(1.0 - 1.0 / alpha);
    return SingleQubitGate({diag, off, off, -diag});
}

UnitaryExpr walsh_hadamard(unsigned n) {
    return UnitaryExpr::tensor(std::vector<SingleQubitGate>(n, hadamard_gate()));
}

UnitaryExpr biased_transform(unsigned n, double alpha) {
    return UnitaryExpr::tensor(std::vector<SingleQubitGate>(n, biased_gate(alpha)));
}

UnitaryExpr adjoint(const UnitaryExpr &u) {
    const unsigned n = u.num_qubits();
    switch (u.kind()) {
    case UnitaryExpr::Kind::Dense:
        return UnitaryExpr::dense(u.dense_matrix().adjoint(), 1e-6);
    case UnitaryExpr::Kind::TensorPerQubit: {
        std::vector<SingleQubitGate> gates;
        gates.reserve(n);
        for (const auto &g : u.gates()) {
            gates.push_back(g.adjoint());
        }
        return UnitaryExpr::tensor(std::move(gates));
    }
    case UnitaryExpr::Kind::Seq: {
        std::vector<UnitaryExpr> items;
        const auto src = u.items();
        items.reserve(src.size());
        for (auto it = src.rbegin(); it != src.rend(); ++it) {
            items.push_back(adjoint(*it));
        }
        return UnitaryExpr::sequence(n, std::move(items));
    }
    case UnitaryExpr::Kind::Adjoint:
        return u.inner();
    case UnitaryExpr::Kind::OraclePhase:
        return UnitaryExpr::oracle(n, u.phase_oracle().adjoint());
    }
    throw DomainError("unknown unitary expression kind");
}

namespace {

void apply_impl(const UnitaryExpr &u, StateVector &s, bool dagger) {
    switch (u.kind()) {
    case UnitaryExpr::Kind::Dense:
        if (dagger) {
            apply_dense(s, u.dense_matrix().adjoint());
        } else {
            apply_dense(s, u.dense_matrix());
        }
        return;
    case UnitaryExpr::Kind::TensorPerQubit:
        if (dagger) {
            std::vector<SingleQubitGate> gates;
            gates.reserve(u.num_qubits());
            for (const auto &g : u.gates()) {
                gates.push_back(g.adjoint());
            }
            apply_tensor(s, gates);
        } else {
            apply_tensor(s, u.gates());
        }
        return;
    case UnitaryExpr::Kind::Seq: {
        const auto items = u.items();
        if (dagger) {
            for (auto it = items.rbegin(); it != items.rend(); ++it) {
                apply_impl(*it, s, true);
            }
        } else {
            for (const auto &it : items) {
                apply_impl(it, s, false);
            }
        }
        return;
    }
    case UnitaryExpr::Kind::Adjoint:
        apply_impl(u.inner(), s, !dagger);
        return;
    case UnitaryExpr::Kind::OraclePhase: {
        const auto &o = u.phase_oracle();
        const Amplitude f = o.factor();
        multiply_marked(s, o.marked(), dagger ? std::conj(f) : f);
        return;
    }
    }
}

void check_dims(const UnitaryExpr &u, const StateVector &s) {
    if (u.num_qubits() != s.num_qubits()) {
        throw DomainError("unitary acts on " + std::to_string(u.num_qubits()) +
                          " qubits, state has " + std::to_string(s.num_qubits()));
    }
}

} // namespace

void apply(const UnitaryExpr &u, StateVector &s) {
    check_dims(u, s);
    apply_impl(u, s, false);
}

void apply_adjoint(const UnitaryExpr &u, StateVector &s) {
    check_dims(u, s);
    apply_impl(u, s, true);
}

StateVector applied(const UnitaryExpr &u, StateVector s) {
    apply(u, s);
    return s;
}

DenseMatrix materialize(const UnitaryExpr &u, unsigned dense_cap) {
    const unsigned n = u.num_qubits();
    if (n > dense_cap) {
        throw DenseCapExceeded("dense materialization of " + std::to_string(n) +
                               " qubits exceeds the cap of " +
                               std::to_string(dense_cap));
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    DenseMatrix m(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        StateVector col = basis_state(n, static_cast<BasisIndex>(j));
        apply(u, col);
        for (Eigen::Index i = 0; i < dim; ++i) {
            m(i, j) = col[static_cast<BasisIndex>(i)];
        }
    }
    return m;
}

void selective_phase(StateVector &s, const PhaseOracle &o) {
    multiply_marked(s, o.marked(), o.factor());
}

void ancilla_oracle_apply(StateVector &s,
                          const std::function<bool(BasisIndex)> &f) {
    if (s.num_qubits() < 2) {
        throw DomainError("ancilla oracle needs at least one data qubit plus the ancilla");
    }
    const unsigned n = s.num_qubits() - 1;
    const BasisIndex half = BasisIndex{1} << n;
    for (BasisIndex x = 0; x < half; ++x) {
        if (f(x)) {
            std::swap(s[x], s[x | half]);
        }
    }
}

Amplitude transition_amplitude(const UnitaryExpr &u, BasisIndex gamma,
                               BasisIndex tau) {
    StateVector s = basis_state(u.num_qubits(), gamma);
    if (tau >= s.size()) {
        throw DomainError("target index " + std::to_string(tau) + " out of range");
    }
    apply(u, s);
    return s[tau];
}

namespace {

SingleQubitGate random_rotation(double delta, Rng &rng) {
    double nx = rng.normal();
    double ny = rng.normal();
    double nz = rng.normal();
    const double len = std::sqrt(nx * nx + ny * ny + nz * nz);
    if (len > 0.0) {
        nx /= len;
        ny /= len;
        nz /= len;
    } else {
        nx = 0.0;
        ny = 0.0;
        nz = 1.0;
    }
    const double angle = rng.uniform(-delta, delta);
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    // exp(-i angle/2 n.sigma)
    return SingleQubitGate({Amplitude{c, -s * nz}, Amplitude{-s * ny, -s * nx},
                            Amplitude{s * ny, -s * nx}, Amplitude{c, s * nz}});
}

} // namespace

SingleQubitGate perturb_gate(const SingleQubitGate &g, double delta, Rng &rng) {
    if (!(delta >= 0.0) || !std::isfinite(delta)) {
        throw DomainError("perturbation scale must be finite and >= 0");
    }
    const SingleQubitGate before = random_rotation(delta, rng);
    const SingleQubitGate after = random_rotation(delta, rng);
    return before * g * after;
}

SingleQubitGate random_gate(Rng &rng) {
    Amplitude a{rng.normal(), rng.normal()};
    Amplitude b{rng.normal(), rng.normal()};
    const double len = std::sqrt(std::norm(a) + std::norm(b));
    a /= len;
    b /= len;
    const Amplitude phase = std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi));
    return SingleQubitGate({phase * a, -phase * std::conj(b), phase * b,
                            phase * std::conj(a)});
}

DenseMatrix random_unitary_matrix(unsigned n, Rng &rng, unsigned dense_cap) {
    if (n < 1 || n > dense_cap) {
        throw DenseCapExceeded("random dense unitary on " + std::to_string(n) +
                               " qubits exceeds the cap of " +
                               std::to_string(dense_cap));
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    DenseMatrix z(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        for (Eigen::Index i = 0; i < dim; ++i) {
            z(i, j) = Amplitude{rng.normal(), rng.normal()};
        }
    }
    Eigen::HouseholderQR<DenseMatrix> qr(z);
    DenseMatrix q = qr.householderQ();
    const DenseMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < dim; ++j) {
        const double mag = std::abs(r(j, j));
        if (mag > 0.0) {
            q.col(j) *= r(j, j) / mag;
        }
    }
    return q;
}

} // namespace gaa
