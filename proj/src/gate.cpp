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

#include "gaa/gate.hpp"

#include <cmath>
#include <sstream>

#include "gaa/errors.hpp"

namespace gaa {

SingleQubitGate::SingleQubitGate(const Matrix &m, double tolerance) : m_(m) {
    for (const auto &z : m) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw DomainError("gate has a non-finite entry");
        }
    }
    const double defect = unitarity_defect(m);
    if (!(defect <= tolerance)) {
        std::ostringstream os;
        os << "gate is not unitary (|G^dagger G - I| = " << defect << ")";
        throw DomainError(os.str());
    }
}

double SingleQubitGate::unitarity_defect(const Matrix &m) noexcept {
    double worst = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Amplitude s = std::conj(m[i]) * m[j] + std::conj(m[2 + i]) * m[2 + j];
            if (i == j) {
                s -= 1.0;
            }
            worst = std::max(worst, std::abs(s));
        }
    }
    return worst;
}

SingleQubitGate SingleQubitGate::adjoint() const noexcept {
    return {Matrix{std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]),
                   std::conj(m_[3])},
            Unchecked{}};
}

SingleQubitGate SingleQubitGate::operator*(const SingleQubitGate &rhs) const {
    const auto &a = m_;
    const auto &b = rhs.m_;
    // Product of unitaries; rounding stays far below the construction check.
    return {Matrix{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                   a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]},
            Unchecked{}};
}

bool SingleQubitGate::is_identity() const noexcept {
    return m_[0] == Amplitude{1.0} && m_[1] == Amplitude{} &&
           m_[2] == Amplitude{} && m_[3] == Amplitude{1.0};
}

bool SingleQubitGate::is_real() const noexcept {
    return m_[0].imag() == 0.0 && m_[1].imag() == 0.0 && m_[2].imag() == 0.0 &&
           m_[3].imag() == 0.0;
}

double frobenius_distance(const SingleQubitGate &a, const SingleQubitGate &b) {
    double s = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        s += std::norm(a.matrix()[i] - b.matrix()[i]);
    }
    return std::sqrt(s);
}

} // namespace gaa
