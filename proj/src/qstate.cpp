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

#include "gaa/qstate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "gaa/errors.hpp"

namespace gaa {

namespace {

void check_index(const StateVector &s, BasisIndex idx) {
    if (idx >= s.size()) {
        throw DomainError("basis index " + std::to_string(idx) +
                          " out of range for " + std::to_string(s.num_qubits()) +
                          " qubits");
    }
}

void check_qubit_count(unsigned n) {
    if (n < 1 || n > max_qubits) {
        throw DomainError("qubit count must be in [1, " +
                          std::to_string(max_qubits) + "], got " +
                          std::to_string(n));
    }
}

// ---------------------------------------------------------------------------
// Kernels
//
// Amplitudes are std::complex<double>, which is layout-compatible with
// double[2]. A real gate acts identically on the real and imaginary parts,
// so real gates run over the buffer as a flat double array with every
// stride doubled; that form vectorizes cleanly. Complex arithmetic is
// spelled out by hand to avoid the NaN-recovery path of operator*.
// ---------------------------------------------------------------------------

enum class Kind { Identity, Butterfly, Real, Complex };

struct Prepared {
    unsigned qubit = 0;
    Kind kind = Kind::Identity;
    double r[4] = {};          // real entries (Butterfly, Real)
    double re[4] = {}, im[4] = {}; // complex entries
    double scale = 1.0;        // Butterfly: g = scale * [[1, 1], [1, -1]]
};

Prepared prepare(const SingleQubitGate &g, unsigned qubit) {
    Prepared p;
    p.qubit = qubit;
    const auto &m = g.matrix();
    for (int i = 0; i < 4; ++i) {
        p.r[i] = m[i].real();
        p.re[i] = m[i].real();
        p.im[i] = m[i].imag();
    }
    if (g.is_identity()) {
        p.kind = Kind::Identity;
    } else if (!g.is_real()) {
        p.kind = Kind::Complex;
    } else if (p.r[0] == p.r[1] && p.r[0] == p.r[2] && p.r[0] == -p.r[3]) {
        p.kind = Kind::Butterfly;
        p.scale = p.r[0];
    } else {
        p.kind = Kind::Real;
    }
    return p;
}

inline void real_pair(double &a, double &b, const double *g) noexcept {
    const double x = a;
    const double y = b;
    a = g[0] * x + g[1] * y;
    b = g[2] * x + g[3] * y;
}

inline void fly_pair(double &a, double &b) noexcept {
    const double x = a;
    const double y = b;
    a = x + y;
    b = x - y;
}

inline void scaled_fly_pair(double &a, double &b, double c) noexcept {
    const double x = a;
    const double y = b;
    a = c * (x + y);
    b = c * (x - y);
}

inline void complex_pair(double *a, double *b, const Prepared &p) noexcept {
    const double ar = a[0], ai = a[1], br = b[0], bi = b[1];
    a[0] = p.re[0] * ar - p.im[0] * ai + p.re[1] * br - p.im[1] * bi;
    a[1] = p.re[0] * ai + p.im[0] * ar + p.re[1] * bi + p.im[1] * br;
    b[0] = p.re[2] * ar - p.im[2] * ai + p.re[3] * br - p.im[3] * bi;
    b[1] = p.re[2] * ai + p.im[2] * ar + p.re[3] * bi + p.im[3] * br;
}

// One gate over every pair inside d[0, len_doubles); len is a multiple of
// the pair span. With `unscaled`, butterflies skip their scale factor.
void pass(double *d, std::size_t len_doubles, const Prepared &p, bool unscaled) {
    const std::size_t ds = std::size_t{2} << p.qubit; // stride in doubles
    switch (p.kind) {
    case Kind::Identity:
        return;
    case Kind::Butterfly:
        if (unscaled) {
            for (std::size_t base = 0; base < len_doubles; base += 2 * ds) {
                double *a = d + base;
                double *b = a + ds;
                for (std::size_t j = 0; j < ds; ++j) {
                    fly_pair(a[j], b[j]);
                }
            }
        } else {
            for (std::size_t base = 0; base < len_doubles; base += 2 * ds) {
                double *a = d + base;
                double *b = a + ds;
                for (std::size_t j = 0; j < ds; ++j) {
                    scaled_fly_pair(a[j], b[j], p.scale);
                }
            }
        }
        return;
    case Kind::Real:
        for (std::size_t base = 0; base < len_doubles; base += 2 * ds) {
            double *a = d + base;
            double *b = a + ds;
            for (std::size_t j = 0; j < ds; ++j) {
                real_pair(a[j], b[j], p.r);
            }
        }
        return;
    case Kind::Complex:
        for (std::size_t base = 0; base < len_doubles; base += 2 * ds) {
            double *a = d + base;
            double *b = a + ds;
            for (std::size_t j = 0; j < ds; j += 2) {
                complex_pair(a + j, b + j, p);
            }
        }
        return;
    }
}

constexpr unsigned block_bits = 12; // 2^12 amplitudes = 64 KiB per block
constexpr int max_group = 3;

constexpr std::size_t insert_zero_bit(std::size_t x, unsigned pos) noexcept {
    const std::size_t low = x & ((std::size_t{1} << pos) - 1);
    return ((x >> pos) << (pos + 1)) | low;
}

// Applies G gates on distinct qubits >= block_bits in one sweep. Each
// work item gathers the 2^G amplitudes sharing all other bits; the inner
// loop runs over the contiguous low bits so all 2^G streams are sequential.
template <int G>
void group_pass(double *d, std::size_t size, const Prepared *gates) {
    constexpr int K = 1 << G;
    const unsigned q0 = gates[0].qubit;
    const std::size_t run = std::size_t{1} << q0; // amplitudes per stream run
    std::size_t off[K];
    for (int k = 0; k < K; ++k) {
        std::size_t o = 0;
        for (int i = 0; i < G; ++i) {
            if (k & (1 << i)) {
                o += std::size_t{1} << gates[i].qubit;
            }
        }
        off[k] = 2 * o; // in doubles
    }

    bool any_complex = false;
    bool all_fly = true;
    double fly_scale = 1.0;
    for (int i = 0; i < G; ++i) {
        any_complex |= gates[i].kind == Kind::Complex;
        all_fly &= gates[i].kind == Kind::Butterfly;
        fly_scale *= gates[i].scale;
    }

    const std::size_t outer = size >> (q0 + G);
    for (std::size_t t = 0; t < outer; ++t) {
        std::size_t base = t << q0;
        for (int i = 0; i < G; ++i) {
            base = insert_zero_bit(base, gates[i].qubit);
        }
        double *p = d + 2 * base;
        if (any_complex) {
            for (std::size_t j = 0; j < 2 * run; j += 2) {
                double v[K][2];
                for (int k = 0; k < K; ++k) {
                    v[k][0] = p[off[k] + j];
                    v[k][1] = p[off[k] + j + 1];
                }
                for (int i = 0; i < G; ++i) {
                    const Prepared &g = gates[i];
                    if (g.kind == Kind::Identity) {
                        continue;
                    }
                    for (int k = 0; k < K; ++k) {
                        if (!(k & (1 << i))) {
                            complex_pair(v[k], v[k | (1 << i)], g);
                        }
                    }
                }
                for (int k = 0; k < K; ++k) {
                    p[off[k] + j] = v[k][0];
                    p[off[k] + j + 1] = v[k][1];
                }
            }
        } else if (all_fly) {
            for (std::size_t j = 0; j < 2 * run; ++j) {
                double v[K];
                for (int k = 0; k < K; ++k) {
                    v[k] = p[off[k] + j];
                }
                for (int i = 0; i < G; ++i) {
                    for (int k = 0; k < K; ++k) {
                        if (!(k & (1 << i))) {
                            fly_pair(v[k], v[k | (1 << i)]);
                        }
                    }
                }
                for (int k = 0; k < K; ++k) {
                    p[off[k] + j] = fly_scale * v[k];
                }
            }
        } else {
            for (std::size_t j = 0; j < 2 * run; ++j) {
                double v[K];
                for (int k = 0; k < K; ++k) {
                    v[k] = p[off[k] + j];
                }
                for (int i = 0; i < G; ++i) {
                    const Prepared &g = gates[i];
                    for (int k = 0; k < K; ++k) {
                        if (!(k & (1 << i))) {
                            if (g.kind == Kind::Butterfly) {
                                scaled_fly_pair(v[k], v[k | (1 << i)], g.scale);
                            } else if (g.kind == Kind::Real) {
                                real_pair(v[k], v[k | (1 << i)], g.r);
                            }
                        }
                    }
                }
                for (int k = 0; k < K; ++k) {
                    p[off[k] + j] = v[k];
                }
            }
        }
    }
}

} // namespace

// ---------------------------------------------------------------------------

StateVector::StateVector(unsigned num_qubits) : num_qubits_(num_qubits) {
    check_qubit_count(num_qubits);
    amps_.assign(std::size_t{1} << num_qubits, Amplitude{});
    amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amps) {
    if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
        throw DomainError("amplitude count must be a power of two >= 2, got " +
                          std::to_string(amps.size()));
    }
    for (const auto &a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw DomainError("non-finite amplitude");
        }
    }
    const auto n = static_cast<unsigned>(std::countr_zero(amps.size()));
    check_qubit_count(n);
    return {n, std::move(amps)};
}

double StateVector::norm_squared() const noexcept {
    double s = 0.0;
    for (const auto &a : amps_) {
        s += a.real() * a.real() + a.imag() * a.imag();
    }
    return s;
}

void StateVector::scale(Amplitude factor) noexcept {
    if (factor.imag() == 0.0) {
        const double r = factor.real();
        auto *d = reinterpret_cast<double *>(amps_.data());
        for (std::size_t i = 0; i < 2 * amps_.size(); ++i) {
            d[i] *= r;
        }
        return;
    }
    for (auto &a : amps_) {
        a = {a.real() * factor.real() - a.imag() * factor.imag(),
             a.real() * factor.imag() + a.imag() * factor.real()};
    }
}

StateVector basis_state(unsigned num_qubits, BasisIndex idx) {
    StateVector s(num_qubits);
    check_index(s, idx);
    s[0] = 0.0;
    s[idx] = 1.0;
    return s;
}

Amplitude inner_product(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DomainError("inner product of states with different qubit counts");
    }
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto x = a[i];
        const auto y = b[i];
        re += x.real() * y.real() + x.imag() * y.imag();
        im += x.real() * y.imag() - x.imag() * y.real();
    }
    return {re, im};
}

double max_abs_diff(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DomainError("comparing states with different qubit counts");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

double distance(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DomainError("comparing states with different qubit counts");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::norm(a[i] - b[i]);
    }
    return std::sqrt(s);
}

double probability(const StateVector &s, BasisIndex idx) {
    check_index(s, idx);
    return std::norm(s[idx]);
}

BasisIndex sample(const StateVector &s, Rng &rng) {
    const double target = rng.uniform() * s.norm_squared();
    double cumulative = 0.0;
    BasisIndex last_nonzero = 0;
    for (BasisIndex i = 0; i < s.size(); ++i) {
        const double p = std::norm(s[i]);
        if (p == 0.0) {
            continue;
        }
        cumulative += p;
        last_nonzero = i;
        if (target < cumulative) {
            return i;
        }
    }
    return last_nonzero;
}

void apply_single_qubit_gate(StateVector &s, const SingleQubitGate &g,
                             unsigned qubit) {
    if (qubit >= s.num_qubits()) {
        throw DomainError("qubit " + std::to_string(qubit) +
                          " out of range for " + std::to_string(s.num_qubits()) +
                          " qubits");
    }
    auto *d = reinterpret_cast<double *>(s.amplitudes().data());
    pass(d, 2 * s.size(), prepare(g, qubit), false);
}

void apply_tensor(StateVector &s, std::span<const SingleQubitGate> gates) {
    const unsigned n = s.num_qubits();
    if (gates.size() != n) {
        throw DomainError("tensor product has " + std::to_string(gates.size()) +
                          " gates for " + std::to_string(n) + " qubits");
    }
    std::vector<Prepared> low;
    std::vector<Prepared> high;
    for (unsigned q = 0; q < n; ++q) {
        Prepared p = prepare(gates[q], q);
        if (p.kind == Kind::Identity) {
            continue;
        }
        (q < block_bits ? low : high).push_back(p);
    }
    auto *d = reinterpret_cast<double *>(s.amplitudes().data());
    const std::size_t total = 2 * s.size();

    if (!low.empty()) {
        const bool all_fly = std::all_of(low.begin(), low.end(), [](const auto &p) {
            return p.kind == Kind::Butterfly;
        });
        double fly_scale = 1.0;
        for (const auto &p : low) {
            fly_scale *= p.scale;
        }
        const std::size_t block =
            2 * (std::size_t{1} << std::min(n, block_bits));
        for (std::size_t b = 0; b < total; b += block) {
            for (const auto &p : low) {
                pass(d + b, block, p, all_fly);
            }
            if (all_fly) {
                for (std::size_t j = b; j < b + block; ++j) {
                    d[j] *= fly_scale;
                }
            }
        }
    }

    for (std::size_t i = 0; i < high.size(); i += max_group) {
        const auto g = std::min<std::size_t>(max_group, high.size() - i);
        switch (g) {
        case 1:
            group_pass<1>(d, s.size(), &high[i]);
            break;
        case 2:
            group_pass<2>(d, s.size(), &high[i]);
            break;
        default:
            group_pass<3>(d, s.size(), &high[i]);
            break;
        }
    }
}

void apply_dense(StateVector &s, const DenseMatrix &m) {
    const auto dim = static_cast<Eigen::Index>(s.size());
    if (m.rows() != dim || m.cols() != dim) {
        throw DomainError("dense matrix is " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + ", state has dimension " +
                          std::to_string(s.size()));
    }
    Eigen::Map<Eigen::VectorXcd> v(s.amplitudes().data(), dim);
    Eigen::VectorXcd out = m * v;
    v = out;
}

void multiply_marked(StateVector &s, std::span<const BasisIndex> marked,
                     Amplitude factor) {
    for (auto idx : marked) {
        check_index(s, idx);
    }
    for (auto idx : marked) {
        const auto a = s[idx];
        s[idx] = {a.real() * factor.real() - a.imag() * factor.imag(),
                  a.real() * factor.imag() + a.imag() * factor.real()};
    }
}

} // namespace gaa
