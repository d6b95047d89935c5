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

#include <cstdint>
#include <initializer_list>

namespace gaa {

/// Counter-based random source.
///
/// Every draw is a pure function of (key, counter), so a stream keyed by
/// e.g. (seed, trial, gate) yields the same numbers no matter in which
/// order streams are consumed. Conversions to floating point are done here
/// rather than through <random> distributions, whose output is
/// implementation-defined.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) noexcept : key_(mix(seed)) {}

    /// Stream derived from a seed and any number of sub-keys.
    Rng(std::uint64_t seed, std::initializer_list<std::uint64_t> subkeys) noexcept
        : key_(mix(seed)) {
        for (auto k : subkeys) {
            key_ = mix(key_ ^ mix(k + 0x632be59bd9b4e019ULL));
        }
    }

    std::uint64_t next_u64() noexcept {
        return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) noexcept {
        return lo + (hi - lo) * uniform();
    }

    /// Standard normal via Box-Muller.
    double normal() noexcept;

    [[nodiscard]] std::uint64_t key() const noexcept { return key_; }

  private:
    // splitmix64 finalizer
    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace gaa
