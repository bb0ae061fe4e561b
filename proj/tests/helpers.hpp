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

// Test-only utilities. The reference implementations here deliberately take
// different numerical routes than the library (dense matvec, sequential long
// double sums) so agreement is evidence, not tautology.

#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsc/statevector.hpp"

namespace qsc::test {

/// Random normalized state via Box-Muller on SplitMix64 units. u1 is shifted
/// into (0, 1] so the logarithm is always finite.
inline StateVector make_random_state(const RegisterConfig& cfg, std::uint64_t seed) {
    SplitMix64 rng(seed);
    StateVector state;
    state.amps.resize(cfg.dim);
    for (std::uint64_t i = 0; i < cfg.dim; ++i) {
        const double u1 = (static_cast<double>(rng.next() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = rng.next_unit();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        state.amps[i] = Complex(radius * std::cos(angle), radius * std::sin(angle));
    }
    long double norm = 0.0L;
    for (const Complex& amp : state.amps) {
        norm += static_cast<long double>(std::norm(amp));
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(norm));
    for (Complex& amp : state.amps) {
        amp *= scale;
    }
    return state;
}

/// Dense reference for the diffusion operator: the explicit matrix
/// (2/N) J - I applied row by row.
inline StateVector dense_diffusion_reference(const StateVector& state) {
    const std::size_t dim = state.amps.size();
    StateVector out;
    out.amps.resize(dim);
    for (std::size_t row = 0; row < dim; ++row) {
        Complex acc(0.0, 0.0);
        for (std::size_t col = 0; col < dim; ++col) {
            const double entry = 2.0 / static_cast<double>(dim) - (row == col ? 1.0 : 0.0);
            acc += entry * state.amps[col];
        }
        out.amps[row] = acc;
    }
    return out;
}

inline double max_elementwise_diff(const StateVector& a, const StateVector& b) {
    if (a.amps.size() != b.amps.size()) {
        throw std::invalid_argument("state sizes differ");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.amps.size(); ++i) {
        worst = std::max(worst, std::abs(a.amps[i] - b.amps[i]));
    }
    return worst;
}

/// Independent norm route: sequential long double accumulation.
inline double sequential_norm_squared(const StateVector& state) {
    long double acc = 0.0L;
    for (const Complex& amp : state.amps) {
        acc += static_cast<long double>(std::norm(amp));
    }
    return static_cast<double>(acc);
}

inline std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    file << content;
}

}  // namespace qsc::test
