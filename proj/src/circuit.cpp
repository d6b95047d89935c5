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

#include "gaa/circuit.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

#include "gaa/errors.hpp"

namespace gaa {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

double parse_real(std::string_view tok, std::size_t line) {
    double v = 0.0;
    const char *first = tok.data();
    const char *last = tok.data() + tok.size();
    if (!tok.empty() && tok.front() == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
        throw ParseError(line, "expected a number, got '" + std::string(tok) + "'");
    }
    return v;
}

unsigned parse_qubit(std::string_view tok, std::size_t line) {
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || v >= max_qubits) {
        throw ParseError(line, "bad qubit index '" + std::string(tok) + "'");
    }
    return v;
}

} // namespace

BasisIndex parse_basis_index(std::string_view tok) {
    int base = 10;
    if (tok.size() > 2 && tok[0] == '0' && (tok[1] == 'b' || tok[1] == 'B')) {
        base = 2;
        tok.remove_prefix(2);
    }
    BasisIndex v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v, base);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw DomainError("bad basis index '" + std::string(tok) + "'");
    }
    return v;
}

GateSequence::GateSequence(unsigned num_qubits, std::vector<Op> ops)
    : num_qubits_(num_qubits), ops_(std::move(ops)) {
    if (num_qubits_ < 1 || num_qubits_ > max_qubits) {
        throw DomainError("gate sequence qubit count out of range");
    }
    if (ops_.empty()) {
        throw DomainError("gate sequence is empty");
    }
    const BasisIndex dim = BasisIndex{1} << num_qubits_;
    for (const auto &op : ops_) {
        if (const auto *g = std::get_if<GateOp>(&op)) {
            if (g->qubit >= num_qubits_) {
                throw DomainError("gate on qubit " + std::to_string(g->qubit) +
                                  " outside " + std::to_string(num_qubits_) +
                                  " qubits");
            }
        } else {
            for (auto idx : std::get<PhaseOracle>(op).marked()) {
                if (idx >= dim) {
                    throw DomainError("phase index " + std::to_string(idx) +
                                      " outside " + std::to_string(num_qubits_) +
                                      " qubits");
                }
            }
        }
    }
}

UnitaryExpr GateSequence::to_expr() const {
    std::vector<UnitaryExpr> items;
    std::vector<SingleQubitGate> layer(num_qubits_);
    bool layer_used = false;
    auto flush = [&] {
        if (layer_used) {
            items.push_back(UnitaryExpr::tensor(layer));
            layer.assign(num_qubits_, SingleQubitGate{});
            layer_used = false;
        }
    };
    for (const auto &op : ops_) {
        if (const auto *g = std::get_if<GateOp>(&op)) {
            // gates on distinct qubits commute, so only same-qubit order matters
            layer[g->qubit] = g->gate * layer[g->qubit];
            layer_used = true;
        } else {
            flush();
            items.push_back(UnitaryExpr::oracle(num_qubits_, std::get<PhaseOracle>(op)));
        }
    }
    flush();
    return UnitaryExpr::sequence(num_qubits_, std::move(items));
}

GateSequence parse_gate_list(std::string_view text, std::optional<unsigned> num_qubits) {
    std::vector<GateSequence::Op> ops;
    unsigned needed = 1;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto tok = split_ws(line);
        if (tok.empty()) {
            continue;
        }
        const std::string_view op = tok[0];
        auto expect = [&](std::size_t count) {
            if (tok.size() != count) {
                throw ParseError(line_no, std::string(op) + " expects " +
                                              std::to_string(count - 1) + " arguments");
            }
        };
        try {
            if (op == "H") {
                expect(2);
                const unsigned q = parse_qubit(tok[1], line_no);
                ops.emplace_back(GateOp{q, hadamard_gate()});
                needed = std::max(needed, q + 1);
            } else if (op == "GATE") {
                expect(10);
                const unsigned q = parse_qubit(tok[1], line_no);
                SingleQubitGate::Matrix m;
                for (std::size_t i = 0; i < 4; ++i) {
                    m[i] = {parse_real(tok[2 + 2 * i], line_no),
                            parse_real(tok[3 + 2 * i], line_no)};
                }
                ops.emplace_back(GateOp{q, SingleQubitGate(m)});
                needed = std::max(needed, q + 1);
            } else if (op == "BIAS") {
                expect(3);
                const unsigned q = parse_qubit(tok[1], line_no);
                ops.emplace_back(GateOp{q, biased_gate(parse_real(tok[2], line_no))});
                needed = std::max(needed, q + 1);
            } else if (op == "PHASE") {
                const auto colon = std::find(tok.begin(), tok.end(), std::string_view(":"));
                if (colon == tok.end() || colon == tok.begin() + 1 ||
                    colon + 2 != tok.end()) {
                    throw ParseError(line_no, "PHASE expects 'idx... : phi'");
                }
                std::vector<BasisIndex> marked;
                for (auto it = tok.begin() + 1; it != colon; ++it) {
                    const BasisIndex idx = parse_basis_index(*it);
                    marked.push_back(idx);
                    needed = std::max(needed, static_cast<unsigned>(std::bit_width(idx)));
                }
                ops.emplace_back(PhaseOracle(std::move(marked),
                                             parse_real(*(colon + 1), line_no)));
            } else {
                throw ParseError(line_no, "unknown operation '" + std::string(op) + "'");
            }
        } catch (const DomainError &e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (ops.empty()) {
        throw ParseError(line_no, "gate list contains no operations");
    }
    const unsigned n = num_qubits.value_or(needed);
    return {n, std::move(ops)};
}

std::string format_gate_list(const GateSequence &seq) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(17);
    for (const auto &op : seq.ops()) {
        if (const auto *g = std::get_if<GateOp>(&op)) {
            os << "GATE " << g->qubit;
            for (const auto &z : g->gate.matrix()) {
                os << ' ' << z.real() << ' ' << z.imag();
            }
            os << '\n';
        } else {
            const auto &o = std::get<PhaseOracle>(op);
            os << "PHASE";
            for (auto idx : o.marked()) {
                os << ' ' << idx;
            }
            os << " : " << o.phase() << '\n';
        }
    }
    return os.str();
}

} // namespace gaa
