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

#include <stdexcept>
#include <string>

namespace gaa {

/// Raised when an argument lies outside the mathematical domain of an
/// operation (index out of range, size mismatch, non-unitary input, ...).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
    [[nodiscard]] virtual const char *name() const noexcept {
        return "domain_error";
    }
};

/// The start state has (numerically) zero overlap with the target under U,
/// so amplification cannot make progress.
class UnreachableTarget : public DomainError {
  public:
    using DomainError::DomainError;
    [[nodiscard]] const char *name() const noexcept override {
        return "unreachable_target";
    }
};

/// A dense 2^n x 2^n matrix was requested above the configured qubit cap.
class DenseCapExceeded : public DomainError {
  public:
    using DomainError::DomainError;
    [[nodiscard]] const char *name() const noexcept override {
        return "dense_cap_exceeded";
    }
};

/// Malformed gate-list text.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

} // namespace gaa
