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
 * String-comparison protocol: compiles two strings into a phase oracle,
 * prepares the combined input (uniform first register + fixed ancilla
 * labels), runs the amplification loop and produces a verdict transcript.
 */

#pragma once

#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsc/statevector.hpp"

namespace qsc {

/// The two strings under comparison plus the register sized to index them.
///
/// `pattern` is the string the per-position predicates are compiled from;
/// `subject` is the string whose positions the basis labels address. Both
/// must share one power-of-two length N = cfg.dim >= 2.
struct ComparisonInstance {
    std::string pattern;
    std::string subject;
    RegisterConfig cfg;
    std::string alphabet;            // sorted distinct symbols of both strings
    std::optional<char> pad_symbol;  // set when the strings were padded
};

inline std::string collect_alphabet(std::string_view pattern, std::string_view subject) {
    std::string symbols;
    symbols.reserve(pattern.size() + subject.size());
    symbols.append(pattern);
    symbols.append(subject);
    std::sort(symbols.begin(), symbols.end());
    symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
    return symbols;
}

inline ComparisonInstance make_instance(std::string_view pattern, std::string_view subject) {
    if (pattern.size() != subject.size()) {
        throw std::invalid_argument("strings differ in length (" + std::to_string(pattern.size()) +
                                    " vs " + std::to_string(subject.size()) +
                                    "); pad them to a common length first");
    }
    if (pattern.size() < 2) {
        throw std::invalid_argument("strings must hold at least 2 symbols, got length " +
                                    std::to_string(pattern.size()));
    }
    ComparisonInstance inst;
    inst.pattern = std::string(pattern);
    inst.subject = std::string(subject);
    inst.cfg = RegisterConfig::from_dim(pattern.size());
    inst.alphabet = collect_alphabet(pattern, subject);
    return inst;
}

/// First symbol not used by either string, preferring printable candidates.
inline char default_pad_symbol(std::string_view pattern, std::string_view subject) {
    const std::string used = collect_alphabet(pattern, subject);
    const auto unused = [&used](char c) {
        return used.find(c) == std::string::npos;
    };
    for (char c : std::string_view("#.*_~%+-")) {
        if (unused(c)) {
            return c;
        }
    }
    for (int c = 0x21; c <= 0x7e; ++c) {
        if (unused(static_cast<char>(c))) {
            return static_cast<char>(c);
        }
    }
    for (int c = 0x01; c <= 0xff; ++c) {
        if (unused(static_cast<char>(c))) {
            return static_cast<char>(c);
        }
    }
    throw std::invalid_argument("no unused pad symbol exists for these strings");
}

/// Right-pads both strings with one reserved symbol up to the next power of
/// two (minimum 2), then builds the instance. The pad symbol must not occur
/// in either string when padding is actually applied.
inline ComparisonInstance make_padded_instance(std::string_view pattern, std::string_view subject,
                                               std::optional<char> pad_symbol = std::nullopt) {
    const std::size_t longest = std::max(pattern.size(), subject.size());
    if (longest == 0) {
        throw std::invalid_argument("strings must be nonempty");
    }
    std::size_t target = 2;
    while (target < longest) {
        target *= 2;
    }
    if (pattern.size() == target && subject.size() == target) {
        return make_instance(pattern, subject);
    }
    const char pad = pad_symbol ? *pad_symbol : default_pad_symbol(pattern, subject);
    if (pattern.find(pad) != std::string_view::npos || subject.find(pad) != std::string_view::npos) {
        throw std::invalid_argument(std::string("pad symbol '") + pad +
                                    "' already occurs in the input strings");
    }
    std::string padded_pattern(pattern);
    std::string padded_subject(subject);
    padded_pattern.resize(target, pad);
    padded_subject.resize(target, pad);
    ComparisonInstance inst = make_instance(padded_pattern, padded_subject);
    inst.pad_symbol = pad;
    return inst;
}

/// Truth table of the position-i predicate: entry v answers whether the
/// subject symbol at position v equals the pattern symbol at position i.
inline std::vector<std::uint8_t> build_sub_oracle(const ComparisonInstance& inst,
                                                  std::uint64_t position) {
    if (position >= inst.cfg.dim) {
        throw std::out_of_range("sub-oracle position " + std::to_string(position) +
                                " outside string of length " + std::to_string(inst.cfg.dim));
    }
    const char target = inst.pattern[position];
    std::vector<std::uint8_t> table(inst.cfg.dim);
    for (std::uint64_t v = 0; v < inst.cfg.dim; ++v) {
        table[v] = inst.subject[v] == target ? 1 : 0;
    }
    return table;
}

/// Per-position predicates plus the marked set they induce once the ancilla
/// registers pin positions 1..N-1 to their own labels.
///
/// Truth tables are materialized row by row on demand; holding all N rows
/// would cost N^2 entries, which the n=20 bound does not allow.
struct OracleSpec {
    ComparisonInstance instance;
    MarkedSet marked;

    bool sub_oracle(std::uint64_t position, std::uint64_t label) const {
        return instance.subject[label] == instance.pattern[position];
    }

    std::vector<std::uint8_t> table(std::uint64_t position) const {
        return build_sub_oracle(instance, position);
    }
};

/// AND-combines the N per-position predicates. Registers 1..N-1 hold the
/// fixed labels 1..N-1, so only the first register's label varies: a label v
/// is marked iff every tail position matches and the subject symbol at v
/// equals the pattern's first symbol.
inline OracleSpec combine_sub_oracles(const ComparisonInstance& inst) {
    bool tail_matches = true;
    for (std::uint64_t i = 1; i < inst.cfg.dim; ++i) {
        if (inst.subject[i] != inst.pattern[i]) {
            tail_matches = false;
            break;
        }
    }
    std::vector<std::uint64_t> members;
    if (tail_matches) {
        for (std::uint64_t v = 0; v < inst.cfg.dim; ++v) {
            if (inst.subject[v] == inst.pattern[0]) {
                members.push_back(v);
            }
        }
    }
    return OracleSpec{inst, MarkedSet(inst.cfg.dim, std::move(members))};
}

/// Uniform first register plus the classical ancilla labels 1..N-1.
struct CombinedInputState {
    StateVector first;
    std::vector<std::uint64_t> ancilla_labels;
    std::uint64_t ancilla_qubits = 0;  // (N-1)*n
};

inline CombinedInputState prepare_combined_state(const ComparisonInstance& inst) {
    CombinedInputState combined;
    combined.first = uniform_state(inst.cfg);
    combined.ancilla_labels.resize(inst.cfg.dim - 1);
    std::iota(combined.ancilla_labels.begin(), combined.ancilla_labels.end(), std::uint64_t{1});
    combined.ancilla_qubits = (inst.cfg.dim - 1) * static_cast<std::uint64_t>(inst.cfg.qubits);
    return combined;
}

/// floor((pi/4)*sqrt(N)): the single-marked-state amplification optimum.
inline std::uint64_t default_iterations(const RegisterConfig& cfg) {
    return static_cast<std::uint64_t>(
        std::floor(std::numbers::pi / 4.0 * std::sqrt(static_cast<double>(cfg.dim))));
}

enum class Verdict { Equal, Unequal };

inline std::string_view to_string(Verdict verdict) {
    return verdict == Verdict::Equal ? "EQUAL" : "UNEQUAL";
}

enum class MeasureMode { Exact, Sample };

inline std::string_view to_string(MeasureMode mode) {
    return mode == MeasureMode::Exact ? "exact" : "sample";
}

/// Everything one protocol run produced: the compiled oracle, the final
/// distribution, the verdict and its probabilities, and (in sample mode) the
/// drawn outcome.
struct ComparisonTranscript {
    ComparisonInstance instance;
    OracleSpec oracle;
    std::uint64_t iterations = 0;
    MeasureMode mode = MeasureMode::Exact;
    std::vector<double> final_distribution;
    double p_equal = 0.0;    // probability of outcome 0
    double p_unequal = 0.0;  // probability of any nonzero outcome
    Verdict verdict = Verdict::Unequal;
    std::optional<std::uint64_t> seed;      // sample mode only
    std::optional<std::uint64_t> measured;  // sample mode only
};

/// Runs the full protocol. Exact mode reports the final distribution and
/// verdict probabilities; sample mode additionally draws one outcome with the
/// seed and keys the verdict off it (outcome 0 reads EQUAL). Without an
/// explicit iteration count the default count applies.
inline ComparisonTranscript compare(const ComparisonInstance& inst,
                                    std::optional<std::uint64_t> iterations = std::nullopt,
                                    MeasureMode mode = MeasureMode::Exact,
                                    std::uint64_t seed = 0) {
    ComparisonTranscript transcript;
    transcript.instance = inst;
    transcript.oracle = combine_sub_oracles(inst);
    transcript.iterations = iterations ? *iterations : default_iterations(inst.cfg);
    transcript.mode = mode;

    const StateVector final_state =
        grover_iterate(uniform_state(inst.cfg), transcript.oracle.marked, transcript.iterations);
    transcript.final_distribution = measurement_distribution(final_state);
    transcript.p_equal = transcript.final_distribution[0];
    transcript.p_unequal = detail::pairwise_map_sum<double>(
        1, inst.cfg.dim - 1,
        [&transcript](std::size_t i) { return transcript.final_distribution[i]; });

    if (mode == MeasureMode::Sample) {
        transcript.seed = seed;
        transcript.measured = sample_measurement(final_state, seed);
        transcript.verdict = *transcript.measured == 0 ? Verdict::Equal : Verdict::Unequal;
    } else {
        // Most probable verdict; the tie at p_equal == 0.5 reads as EQUAL.
        transcript.verdict = transcript.p_equal >= 0.5 ? Verdict::Equal : Verdict::Unequal;
    }
    return transcript;
}

}  // namespace qsc
