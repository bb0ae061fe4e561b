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
 * Byte-stable JSON and CSV emitters for the CLI's fixed output schemas.
 * Floats are printed with 17 significant digits in JSON and 12 in CSV
 * (printf %g, IEEE round-half-even), so identical runs serialize to
 * identical bytes. Key order and CSV headers are part of the contract and
 * pinned by golden files.
 */

#pragma once

#include <cstdint>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "qsc/analysis.hpp"
#include "qsc/joint.hpp"
#include "qsc/protocol.hpp"

namespace qsc {

inline constexpr int kJsonDigits = 17;
inline constexpr int kCsvDigits = 12;

inline std::string format_double(double value, int significant_digits) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*g", significant_digits, value);
    return buffer;
}

inline std::string json_number(double value) { return format_double(value, kJsonDigits); }
inline std::string csv_number(double value) { return format_double(value, kCsvDigits); }

inline std::string json_string(std::string_view text) {
    std::string out = "\"";
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buffer[8];
                    std::snprintf(buffer, sizeof buffer, "\\u%04x", c);
                    out += buffer;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
    return out;
}

inline std::string csv_field(std::string_view text) {
    const bool needs_quotes = text.find_first_of(",\"\n\r") != std::string_view::npos;
    if (!needs_quotes) {
        return std::string(text);
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

namespace detail {

inline std::string json_opt_number(const std::optional<double>& value) {
    return value ? json_number(*value) : "null";
}

inline std::string json_opt_bool(const std::optional<bool>& value) {
    return value ? (*value ? "true" : "false") : "null";
}

inline std::string json_pad_symbol(const std::optional<char>& pad) {
    return pad ? json_string(std::string_view(&*pad, 1)) : "null";
}

inline std::string json_distribution(std::span<const double> values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += json_number(values[i]);
    }
    out += "]";
    return out;
}

inline std::string json_label_list(std::span<const std::uint64_t> labels) {
    std::string out = "[";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += std::to_string(labels[i]);
    }
    out += "]";
    return out;
}

}  // namespace detail

inline std::string to_json(const ComparisonTranscript& transcript) {
    const ComparisonInstance& inst = transcript.instance;
    std::string out = "{\n";
    out += "  \"command\": \"compare\",\n";
    out += "  \"a\": " + json_string(inst.pattern) + ",\n";
    out += "  \"b\": " + json_string(inst.subject) + ",\n";
    out += "  \"pad_symbol\": " + detail::json_pad_symbol(inst.pad_symbol) + ",\n";
    out += "  \"n\": " + std::to_string(inst.cfg.qubits) + ",\n";
    out += "  \"N\": " + std::to_string(inst.cfg.dim) + ",\n";
    out += "  \"iterations\": " + std::to_string(transcript.iterations) + ",\n";
    out += "  \"mode\": \"" + std::string(to_string(transcript.mode)) + "\",\n";
    out += "  \"marked_count\": " + std::to_string(transcript.oracle.marked.size()) + ",\n";
    out += "  \"marked\": " + detail::json_label_list(transcript.oracle.marked.members()) + ",\n";
    out += "  \"ancilla_qubits\": " +
           std::to_string((inst.cfg.dim - 1) * static_cast<std::uint64_t>(inst.cfg.qubits)) + ",\n";
    out += "  \"verdict\": \"" + std::string(to_string(transcript.verdict)) + "\",\n";
    out += "  \"p_equal\": " + json_number(transcript.p_equal) + ",\n";
    out += "  \"p_unequal\": " + json_number(transcript.p_unequal) + ",\n";
    if (transcript.mode == MeasureMode::Sample) {
        out += "  \"seed\": " + std::to_string(transcript.seed.value()) + ",\n";
        out += "  \"measured\": " + std::to_string(transcript.measured.value()) + ",\n";
    }
    out += "  \"final_distribution\": " + detail::json_distribution(transcript.final_distribution) +
           "\n";
    out += "}\n";
    return out;
}

inline std::string csv_header_compare() {
    return "a,b,N,iterations,mode,marked_count,ancilla_qubits,verdict,p_equal,p_unequal,seed,"
           "measured\n";
}

inline std::string to_csv_row(const ComparisonTranscript& transcript) {
    const ComparisonInstance& inst = transcript.instance;
    std::string row;
    row += csv_field(inst.pattern) + ",";
    row += csv_field(inst.subject) + ",";
    row += std::to_string(inst.cfg.dim) + ",";
    row += std::to_string(transcript.iterations) + ",";
    row += std::string(to_string(transcript.mode)) + ",";
    row += std::to_string(transcript.oracle.marked.size()) + ",";
    row += std::to_string((inst.cfg.dim - 1) * static_cast<std::uint64_t>(inst.cfg.qubits)) + ",";
    row += std::string(to_string(transcript.verdict)) + ",";
    row += csv_number(transcript.p_equal) + ",";
    row += csv_number(transcript.p_unequal) + ",";
    row += (transcript.seed ? std::to_string(*transcript.seed) : "") + ",";
    row += transcript.measured ? std::to_string(*transcript.measured) : "";
    row += "\n";
    return row;
}

inline std::string sweep_to_json(const ComparisonInstance& inst, std::uint64_t marked,
                                 std::uint64_t max_iterations, std::span<const SweepRow> rows) {
    std::string out = "{\n";
    out += "  \"command\": \"sweep\",\n";
    out += "  \"a\": " + json_string(inst.pattern) + ",\n";
    out += "  \"b\": " + json_string(inst.subject) + ",\n";
    out += "  \"pad_symbol\": " + detail::json_pad_symbol(inst.pad_symbol) + ",\n";
    out += "  \"n\": " + std::to_string(inst.cfg.qubits) + ",\n";
    out += "  \"N\": " + std::to_string(inst.cfg.dim) + ",\n";
    out += "  \"marked_count\": " + std::to_string(marked) + ",\n";
    out += "  \"max_iterations\": " + std::to_string(max_iterations) + ",\n";
    out += "  \"rows\": [\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out += "    {\"k\": " + std::to_string(rows[i].iteration) +
               ", \"p_marked\": " + json_number(rows[i].marked_mass) +
               ", \"p_outcome0\": " + json_number(rows[i].outcome0) + "}";
        out += i + 1 < rows.size() ? ",\n" : "\n";
    }
    out += "  ]\n";
    out += "}\n";
    return out;
}

inline std::string sweep_to_csv(std::span<const SweepRow> rows) {
    std::string out = "k,p_marked,p_outcome0\n";
    for (const SweepRow& row : rows) {
        out += std::to_string(row.iteration) + "," + csv_number(row.marked_mass) + "," +
               csv_number(row.outcome0) + "\n";
    }
    return out;
}

inline std::string to_json(const ClaimReport& report) {
    const ComparisonInstance& inst = report.instance;
    std::string out = "{\n";
    out += "  \"command\": \"report\",\n";
    out += "  \"a\": " + json_string(inst.pattern) + ",\n";
    out += "  \"b\": " + json_string(inst.subject) + ",\n";
    out += "  \"pad_symbol\": " + detail::json_pad_symbol(inst.pad_symbol) + ",\n";
    out += "  \"n\": " + std::to_string(inst.cfg.qubits) + ",\n";
    out += "  \"N\": " + std::to_string(inst.cfg.dim) + ",\n";
    out += "  \"equal_strings\": " + std::string(report.equal_strings ? "true" : "false") + ",\n";
    out += "  \"marked_count\": " + std::to_string(report.marked) + ",\n";
    out += "  \"theta\": " + json_number(report.theta) + ",\n";
    out += "  \"iterations\": " + std::to_string(report.iterations) + ",\n";
    out += "  \"p_equal_verdict\": " + json_number(report.p_equal_verdict) + ",\n";
    out += "  \"p_false_equal\": " + detail::json_opt_number(report.p_false_equal) + ",\n";
    out += "  \"p_false_unequal\": " + detail::json_opt_number(report.p_false_unequal) + ",\n";
    out += "  \"ancilla_qubits\": " + std::to_string(report.ancilla_qubits) + ",\n";
    out += "  \"claims\": [\n";
    for (std::size_t i = 0; i < report.claims.size(); ++i) {
        const ClaimResult& claim = report.claims[i];
        out += "    {\"id\": " + json_string(claim.id) +
               ", \"description\": " + json_string(claim.description) +
               ", \"applicable\": " + (claim.applicable ? "true" : "false") +
               ", \"pass\": " + detail::json_opt_bool(claim.pass) +
               ", \"measured\": " + detail::json_opt_number(claim.measured) + "}";
        out += i + 1 < report.claims.size() ? ",\n" : "\n";
    }
    out += "  ]\n";
    out += "}\n";
    return out;
}

inline std::string csv_header_report() {
    return "a,b,N,marked_count,theta,iterations,p_equal_verdict,p_false_equal,p_false_unequal,"
           "ancilla_qubits,c1,c2,c3,c4\n";
}

inline std::string to_csv_row(const ClaimReport& report) {
    const auto claim_cell = [](const ClaimResult& claim) -> std::string {
        if (!claim.applicable) {
            return "na";
        }
        return claim.pass.value() ? "pass" : "fail";
    };
    const ComparisonInstance& inst = report.instance;
    std::string row;
    row += csv_field(inst.pattern) + ",";
    row += csv_field(inst.subject) + ",";
    row += std::to_string(inst.cfg.dim) + ",";
    row += std::to_string(report.marked) + ",";
    row += csv_number(report.theta) + ",";
    row += std::to_string(report.iterations) + ",";
    row += csv_number(report.p_equal_verdict) + ",";
    row += (report.p_false_equal ? csv_number(*report.p_false_equal) : "") + ",";
    row += (report.p_false_unequal ? csv_number(*report.p_false_unequal) : "") + ",";
    row += std::to_string(report.ancilla_qubits);
    for (const ClaimResult& claim : report.claims) {
        row += "," + claim_cell(claim);
    }
    row += "\n";
    return row;
}

inline std::string to_json(const ValidationSummary& summary) {
    std::string out = "{\n";
    out += "  \"command\": \"validate\",\n";
    out += "  \"n\": " + std::to_string(summary.qubits) + ",\n";
    out += "  \"N\": " + std::to_string(summary.dim) + ",\n";
    out += "  \"instances\": " + std::to_string(summary.instance_count) + ",\n";
    out += "  \"max_iterations\": " + std::to_string(summary.max_iterations) + ",\n";
    out += "  \"max_deviation\": " + json_number(summary.max_deviation) + ",\n";
    out += "  \"max_off_support_mass\": " + json_number(summary.max_off_support_mass) + ",\n";
    out += "  \"ancilla_passivity\": " + std::string(summary.ancilla_passivity ? "true" : "false") +
           ",\n";
    out += "  \"pass\": " + std::string(summary.pass ? "true" : "false") + "\n";
    out += "}\n";
    return out;
}

inline std::string to_csv(const ValidationSummary& summary) {
    std::string out =
        "n,N,instances,max_iterations,max_deviation,max_off_support_mass,ancilla_passivity,pass\n";
    out += std::to_string(summary.qubits) + ",";
    out += std::to_string(summary.dim) + ",";
    out += std::to_string(summary.instance_count) + ",";
    out += std::to_string(summary.max_iterations) + ",";
    out += csv_number(summary.max_deviation) + ",";
    out += csv_number(summary.max_off_support_mass) + ",";
    out += std::string(summary.ancilla_passivity ? "true" : "false") + ",";
    out += std::string(summary.pass ? "true" : "false") + "\n";
    return out;
}

}  // namespace qsc
