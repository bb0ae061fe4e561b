// Copyright 2026 The qsc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Single-register amplitude kernel: state storage, oracle phase flip,
 * diffusion about the mean, measurement distributions and seeded sampling.
 */

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsc {

using Complex = std::complex<double>;

inline constexpr int kMinQubits = 1;
inline constexpr int kMaxQubits = 20;  // 2^20 amplitudes, 16 MiB per state

namespace detail {

// Fixed-order pairwise reduction. The association order never depends on the
// data, and summing 2^m equal values is exact, so the uniform state stays a
// bitwise fixed point of the diffusion.
template <class T, class Term>
T pairwise_map_sum(std::size_t first, std::size_t count, Term&& term) {
    if (count == 0) {
        return T{};
    }
    if (count == 1) {
        return term(first);
    }
    const std::size_t half = count / 2;
    return pairwise_map_sum<T>(first, half, term) +
           pairwise_map_sum<T>(first + half, count - half, term);
}

}  // namespace detail

/// Width of one register: n qubits spanning N = 2^n basis labels.
struct RegisterConfig {
    int qubits = 0;
    std::uint64_t dim = 0;

    static RegisterConfig from_qubits(int qubits) {
        if (qubits < kMinQubits || qubits > kMaxQubits) {
            throw std::invalid_argument("register must have between 1 and 20 qubits, got " +
                                        std::to_string(qubits));
        }
        return {qubits, std::uint64_t{1} << qubits};
    }

    static RegisterConfig from_dim(std::uint64_t dim) {
        if (dim < 2 || !std::has_single_bit(dim)) {
            throw std::invalid_argument("register dimension must be a power of two >= 2, got " +
                                        std::to_string(dim));
        }
        return from_qubits(std::countr_zero(dim));
    }
};

/// Complex amplitudes over the N computational basis labels of one register.
struct StateVector {
    std::vector<Complex> amps;

    std::uint64_t dim() const { return amps.size(); }

    double norm_squared() const {
        return detail::pairwise_map_sum<double>(
            0, amps.size(), [this](std::size_t i) { return std::norm(amps[i]); });
    }
};

/// Sorted basis labels whose phase the oracle flips.
class MarkedSet {
  public:
    MarkedSet() = default;

    MarkedSet(std::uint64_t dim, std::vector<std::uint64_t> members)
        : dim_(dim), members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
        if (!members_.empty() && members_.back() >= dim_) {
            throw std::invalid_argument("marked label " + std::to_string(members_.back()) +
                                        " outside register of dimension " + std::to_string(dim_));
        }
    }

    std::uint64_t dim() const { return dim_; }
    std::uint64_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<std::uint64_t>& members() const { return members_; }

    bool contains(std::uint64_t label) const {
        return std::binary_search(members_.begin(), members_.end(), label);
    }

  private:
    std::uint64_t dim_ = 0;
    std::vector<std::uint64_t> members_;
};

/// Equal-weight superposition 1/sqrt(N) over every basis label.
inline StateVector uniform_state(const RegisterConfig& cfg) {
    const double amp = 1.0 / std::sqrt(static_cast<double>(cfg.dim));
    StateVector state;
    state.amps.assign(cfg.dim, Complex{amp, 0.0});
    return state;
}

/// Oracle action: negate the amplitude of every marked label.
inline StateVector apply_phase_flip(StateVector state, const MarkedSet& marked) {
    if (state.dim() != marked.dim()) {
        throw std::invalid_argument("state dimension " + std::to_string(state.dim()) +
                                    " does not match marked-set dimension " +
                                    std::to_string(marked.dim()));
    }
    for (std::uint64_t label : marked.members()) {
        state.amps[label] = -state.amps[label];
    }
    return state;
}

/// Reflection about the mean amplitude: amp <- 2*mean - amp.
inline StateVector apply_diffusion(StateVector state) {
    if (state.amps.empty()) {
        throw std::invalid_argument("cannot diffuse an empty state");
    }
    const std::size_t n = state.amps.size();
    const Complex mean =
        detail::pairwise_map_sum<Complex>(0, n, [&state](std::size_t i) { return state.amps[i]; }) /
        static_cast<double>(n);
    const Complex twice_mean = 2.0 * mean;
    for (Complex& amp : state.amps) {
        amp = twice_mean - amp;
    }
    return state;
}

/// k rounds of phase flip followed by diffusion; k = 0 is the identity.
inline StateVector grover_iterate(StateVector state, const MarkedSet& marked,
                                  std::uint64_t iterations) {
    if (state.dim() != marked.dim()) {
        throw std::invalid_argument("state dimension " + std::to_string(state.dim()) +
                                    " does not match marked-set dimension " +
                                    std::to_string(marked.dim()));
    }
    for (std::uint64_t i = 0; i < iterations; ++i) {
        state = apply_diffusion(apply_phase_flip(std::move(state), marked));
    }
    return state;
}

/// Probability of each basis outcome: |amp|^2 per label.
inline std::vector<double> measurement_distribution(const StateVector& state) {
    std::vector<double> probs(state.amps.size());
    for (std::size_t i = 0; i < probs.size(); ++i) {
        probs[i] = std::norm(state.amps[i]);
    }
    return probs;
}

/// SplitMix64 (Steele, Lea, Flood): a counter-based generator with a fixed,
/// portable output function. Same seed, same stream, on every platform.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_ = 0;
};

/// One projective measurement: inverts the cumulative distribution at a
/// seed-determined point. Boundary ties resolve toward the lower label, and
/// zero-probability labels are never returned.
inline std::uint64_t sample_measurement(const StateVector& state, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const double u = rng.next_unit();
    double cumulative = 0.0;
    std::uint64_t last_with_mass = 0;
    bool any_mass = false;
    for (std::uint64_t x = 0; x < state.dim(); ++x) {
        const double p = std::norm(state.amps[x]);
        if (p == 0.0) {
            continue;
        }
        cumulative += p;
        last_with_mass = x;
        any_mass = true;
        if (u <= cumulative) {
            return x;
        }
    }
    if (!any_mass) {
        throw std::invalid_argument("cannot sample a measurement from the zero state");
    }
    // u fell into the rounding gap above the last partial sum
    return last_with_mass;
}

}  // namespace qsc
