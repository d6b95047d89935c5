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

#include <array>
#include <complex>

namespace gaa {

using Amplitude = std::complex<double>;

/// A validated 2x2 unitary, stored row-major.
///
/// Construction checks G^dagger G = I to within `tolerance`; a gate that
/// fails the check is never created.
class SingleQubitGate {
  public:
    using Matrix = std::array<Amplitude, 4>;

    static constexpr double default_tolerance = 1e-10;

    /// Identity gate.
    SingleQubitGate() noexcept : m_{1.0, 0.0, 0.0, 1.0} {}

    explicit SingleQubitGate(const Matrix &m,
                             double tolerance = default_tolerance);

    [[nodiscard]] const Matrix &matrix() const noexcept { return m_; }
    [[nodiscard]] Amplitude operator()(int row, int col) const noexcept {
        return m_[2 * row + col];
    }

    [[nodiscard]] SingleQubitGate adjoint() const noexcept;

    /// this * rhs, as matrices (rhs acts first).
    [[nodiscard]] SingleQubitGate operator*(const SingleQubitGate &rhs) const;

    /// Largest deviation of G^dagger G from the identity.
    [[nodiscard]] static double unitarity_defect(const Matrix &m) noexcept;

    [[nodiscard]] bool is_identity() const noexcept;
    [[nodiscard]] bool is_real() const noexcept;

    friend bool operator==(const SingleQubitGate &,
                           const SingleQubitGate &) = default;

  private:
    struct Unchecked {};
    SingleQubitGate(const Matrix &m, Unchecked) noexcept : m_(m) {}

    Matrix m_;
};

/// Frobenius distance between two gates.
double frobenius_distance(const SingleQubitGate &a, const SingleQubitGate &b);

} // namespace gaa
