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
 * Brute-force joint simulation of all N registers (N^N amplitudes). The
 * oracle phase is evaluated on the actual register contents, nothing is
 * assumed about the ancillas; extracting the first register checks that the
 * amplitude mass really stayed on the fixed ancilla labels. This is the
 * independent backend the reduced single-register simulation is validated
 * against.
 */

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qsc/protocol.hpp"

namespace qsc {

// Joint simulation is validation-only; N = 4 already needs 256 amplitudes
// and the next power of two would need 16.7M.
inline constexpr std::uint64_t kMaxJointDim = 4;

inline constexpr double kSupportTolerance = 1e-12;

/// Raised when amplitude mass is found off the fixed ancilla labels.
struct AncillaSupportError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Amplitudes over the N^N joint basis of all N registers. Each register is
/// an N-level qudit; register 0 is the least-significant base-N digit of the
/// amplitude index, so one ancilla configuration owns one contiguous block
/// of N amplitudes.
struct JointState {
    std::uint64_t register_count = 0;  // N registers
    std::uint64_t register_dim = 0;    // N levels each
    std::vector<Complex> amps;

    std::uint64_t digit(std::uint64_t index, std::uint64_t reg) const {
        for (std::uint64_t i = 0; i < reg; ++i) {
            index /= register_dim;
        }
        return index % register_dim;
    }
};

namespace detail {

inline std::uint64_t pow_u64(std::uint64_t base, std::uint64_t exponent) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        result *= base;
    }
    return result;
}

// Mixed-radix code of the ancilla tuple (1, 2, ..., N-1) on registers 1..N-1.
inline std::uint64_t fixed_ancilla_code(std::uint64_t dim) {
    std::uint64_t code = 0;
    std::uint64_t weight = 1;
    for (std::uint64_t label = 1; label < dim; ++label) {
        code += label * weight;
        weight *= dim;
    }
    return code;
}

inline void require_joint_dim(std::uint64_t dim) {
    if (dim > kMaxJointDim) {
        throw std::invalid_argument("joint simulation is capped at N=4, got N=" +
                                    std::to_string(dim));
    }
}

inline void require_matching(const JointState& state, const ComparisonInstance& inst) {
    if (state.register_dim != inst.cfg.dim || state.register_count != inst.cfg.dim ||
        state.amps.size() != pow_u64(inst.cfg.dim, inst.cfg.dim)) {
        throw std::invalid_argument("joint state does not match an N=" +
                                    std::to_string(inst.cfg.dim) + " instance");
    }
}

}  // namespace detail

/// Combined input state laid out over the joint basis: amplitude 1/sqrt(N)
/// on every tuple (v, 1, 2, ..., N-1), zero elsewhere.
inline JointState prepare_joint(const ComparisonInstance& inst) {
    const std::uint64_t dim = inst.cfg.dim;
    detail::require_joint_dim(dim);
    JointState state;
    state.register_count = dim;
    state.register_dim = dim;
    state.amps.assign(detail::pow_u64(dim, dim), Complex{0.0, 0.0});
    const std::uint64_t block = detail::fixed_ancilla_code(dim) * dim;
    const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    for (std::uint64_t v = 0; v < dim; ++v) {
        state.amps[block + v] = Complex{amp, 0.0};
    }
    return state;
}

/// Phase action on the joint basis: each amplitude picks up (-1)^c where c
/// AND-combines the per-position predicates evaluated on that tuple's actual
/// register contents — no position is hard-coded.
inline JointState apply_joint_oracle(JointState state, const ComparisonInstance& inst) {
    detail::require_matching(state, inst);
    const std::uint64_t dim = inst.cfg.dim;
    std::vector<std::vector<std::uint8_t>> tables;
    tables.reserve(dim);
    for (std::uint64_t position = 0; position < dim; ++position) {
        tables.push_back(build_sub_oracle(inst, position));
    }
    for (std::uint64_t index = 0; index < state.amps.size(); ++index) {
        std::uint64_t rest = index;
        bool conjunction = true;
        for (std::uint64_t reg = 0; reg < dim; ++reg) {
            if (tables[reg][rest % dim] == 0) {
                conjunction = false;
                break;
            }
            rest /= dim;
        }
        if (conjunction) {
            state.amps[index] = -state.amps[index];
        }
    }
    return state;
}

/// Reflection about the uniform first-register state, identity on the rest:
/// within each fixed ancilla block, amp <- 2*mean - amp.
inline JointState apply_joint_diffusion(JointState state) {
    const std::uint64_t dim = state.register_dim;
    if (dim == 0 || state.amps.empty()) {
        throw std::invalid_argument("cannot diffuse an empty joint state");
    }
    for (std::uint64_t block = 0; block < state.amps.size(); block += dim) {
        const Complex mean = detail::pairwise_map_sum<Complex>(
                                 block, dim, [&state](std::size_t i) { return state.amps[i]; }) /
                             static_cast<double>(dim);
        const Complex twice_mean = 2.0 * mean;
        for (std::uint64_t v = 0; v < dim; ++v) {
            state.amps[block + v] = twice_mean - state.amps[block + v];
        }
    }
    return state;
}

/// Probability mass sitting outside the fixed ancilla block. Zero (up to
/// rounding) whenever the ancillas really stayed passive.
inline double off_support_mass(const JointState& state) {
    const std::uint64_t dim = state.register_dim;
    const std::uint64_t block = detail::fixed_ancilla_code(dim) * dim;
    return detail::pairwise_map_sum<double>(0, state.amps.size(), [&](std::size_t i) {
        const bool on_support = i >= block && i < block + dim;
        return on_support ? 0.0 : std::norm(state.amps[i]);
    });
}

/// Reads the first register out of the joint state. Any amplitude above
/// 1e-12 on a tuple whose ancillas differ from (1, ..., N-1) means the
/// ancillas did not stay passive and raises AncillaSupportError.
inline StateVector extract_first_register(const JointState& state) {
    const std::uint64_t dim = state.register_dim;
    const std::uint64_t block = detail::fixed_ancilla_code(dim) * dim;
    for (std::uint64_t index = 0; index < state.amps.size(); ++index) {
        if (index >= block && index < block + dim) {
            continue;
        }
        if (std::abs(state.amps[index]) > kSupportTolerance) {
            std::string tuple = "(";
            for (std::uint64_t reg = 0; reg < state.register_count; ++reg) {
                tuple += (reg == 0 ? "" : ",") + std::to_string(state.digit(index, reg));
            }
            tuple += ")";
            throw AncillaSupportError("amplitude mass on ancilla tuple " + tuple +
                                      " breaks the fixed-label support");
        }
    }
    StateVector first;
    first.amps.assign(state.amps.begin() + static_cast<std::ptrdiff_t>(block),
                      state.amps.begin() + static_cast<std::ptrdiff_t>(block + dim));
    return first;
}

/// Outcome of replaying an instance battery through both backends.
struct ValidationSummary {
    int qubits = 0;
    std::uint64_t dim = 0;
    std::size_t instance_count = 0;
    std::uint64_t max_iterations = 0;
    double max_deviation = 0.0;
    double max_off_support_mass = 0.0;
    bool ancilla_passivity = false;
    bool pass = false;
};

inline constexpr double kValidationDeviationBound = 1e-9;

/// Fixed instance battery for one register dimension: every pair over a
/// two-symbol alphabet plus, at N=4, a curated set of equal, head-mismatch,
/// tail-mismatch and repeated-symbol cases.
inline std::vector<std::pair<std::string, std::string>> validation_battery(std::uint64_t dim) {
    detail::require_joint_dim(dim);
    std::vector<std::pair<std::string, std::string>> battery;
    if (dim == 2) {
        const std::vector<std::string> words = {"aa", "ab", "ba", "bb"};
        for (const auto& pattern : words) {
            for (const auto& subject : words) {
                battery.emplace_back(pattern, subject);
            }
        }
        return battery;
    }
    // All 16 self-pairs over {a,b}^4: equal instances with every repetition
    // structure, including the all-same-symbol extreme.
    for (int bits = 0; bits < 16; ++bits) {
        std::string word;
        for (int position = 0; position < 4; ++position) {
            word += (bits >> position) & 1 ? 'b' : 'a';
        }
        battery.emplace_back(word, word);
    }
    const std::pair<const char*, const char*> curated[] = {
        {"abcd", "abcd"}, {"abca", "abca"}, {"abba", "abba"}, {"abcb", "abcb"},
        {"aaab", "aaab"}, {"abab", "abab"}, {"xyzw", "xyzw"}, {"abcd", "abcx"},
        {"abcd", "xbcd"}, {"abca", "dbca"}, {"abcd", "axcd"}, {"abcd", "abxd"},
        {"abcd", "dcba"}, {"aabc", "babc"}, {"baaa", "caaa"}, {"baab", "caab"},
        {"abcd", "abdc"}, {"aabb", "aabc"}, {"pqpq", "pqpp"}, {"abab", "baba"},
    };
    for (const auto& [pattern, subject] : curated) {
        battery.emplace_back(pattern, subject);
    }
    return battery;
}

/// Replays the battery with k = 0..max_iterations through the joint backend
/// and the reduced backend, tracking the worst elementwise deviation of the
/// extracted first register and the worst off-support mass.
inline ValidationSummary run_validation(std::uint64_t dim, std::uint64_t max_iterations = 4) {
    detail::require_joint_dim(dim);
    const auto battery = validation_battery(dim);
    ValidationSummary summary;
    summary.dim = dim;
    summary.qubits = RegisterConfig::from_dim(dim).qubits;
    summary.instance_count = battery.size();
    summary.max_iterations = max_iterations;
    for (const auto& [pattern, subject] : battery) {
        const ComparisonInstance inst = make_instance(pattern, subject);
        const OracleSpec oracle = combine_sub_oracles(inst);
        JointState joint = prepare_joint(inst);
        StateVector reduced = uniform_state(inst.cfg);
        for (std::uint64_t k = 0; k <= max_iterations; ++k) {
            if (k > 0) {
                joint = apply_joint_diffusion(apply_joint_oracle(std::move(joint), inst));
                reduced = apply_diffusion(apply_phase_flip(std::move(reduced), oracle.marked));
            }
            summary.max_off_support_mass =
                std::max(summary.max_off_support_mass, off_support_mass(joint));
            const StateVector extracted = extract_first_register(joint);
            for (std::uint64_t v = 0; v < dim; ++v) {
                summary.max_deviation =
                    std::max(summary.max_deviation, std::abs(extracted.amps[v] - reduced.amps[v]));
            }
        }
    }
    summary.ancilla_passivity = summary.max_off_support_mass < kSupportTolerance;
    summary.pass = summary.ancilla_passivity && summary.max_deviation < kValidationDeviationBound;
    return summary;
}

}  // namespace qsc
