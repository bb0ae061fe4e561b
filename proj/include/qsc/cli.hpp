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
 * Command-line front end: compare, sweep, validate, report.
 *
 * Exit codes: 0 on success, 2 on usage or input-validation errors, 1 when
 * `validate` ran but the backends disagreed, 3 on internal failures. The
 * run() entry point takes explicit streams so tests can drive the CLI
 * in-process and compare bytes.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "qsc/analysis.hpp"
#include "qsc/joint.hpp"
#include "qsc/protocol.hpp"
#include "qsc/serialize.hpp"

namespace qsc::cli {

/// User-input problem: reported on stderr and mapped to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

/// Builds the padded instance from raw CLI strings. Unequal raw lengths are
/// accepted only with an explicit pad symbol; every constraint violation from
/// instance construction is a usage error here.
inline ComparisonInstance build_instance(const std::string& a, const std::string& b,
                                         const std::optional<char>& pad_symbol) {
    if (a.empty() || b.empty()) {
        throw UsageError("input strings must be nonempty");
    }
    if (a.size() != b.size() && !pad_symbol) {
        throw UsageError(
            "inputs have different lengths; pass --pad-symbol to pad both to a common "
            "power-of-two length");
    }
    try {
        return make_padded_instance(a, b, pad_symbol);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

inline std::optional<char> parse_pad_symbol(const std::optional<std::string>& flag) {
    if (!flag) {
        return std::nullopt;
    }
    if (flag->size() != 1) {
        throw UsageError("--pad-symbol must be a single character");
    }
    return flag->front();
}

/// Batch file: strings are consumed in consecutive line pairs (a then b).
inline std::vector<std::pair<std::string, std::string>> read_pairs(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw UsageError("cannot open batch file: " + path);
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(file, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        lines.push_back(line);
    }
    if (lines.empty()) {
        throw UsageError("batch file is empty: " + path);
    }
    if (lines.size() % 2 != 0) {
        throw UsageError("batch file has an odd number of lines; strings are consumed in pairs");
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    pairs.reserve(lines.size() / 2);
    for (std::size_t i = 0; i < lines.size(); i += 2) {
        pairs.emplace_back(lines[i], lines[i + 1]);
    }
    return pairs;
}

inline std::string join_json_array(const std::vector<std::string>& objects) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < objects.size(); ++i) {
        std::string body = objects[i];
        if (!body.empty() && body.back() == '\n') {
            body.pop_back();
        }
        out += body;
        out += i + 1 < objects.size() ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

inline void write_output(const std::string& text, const std::optional<std::string>& out_path,
                         std::ostream& out) {
    if (!out_path) {
        out << text;
        return;
    }
    std::ofstream file(*out_path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open output path: " + *out_path);
    }
    file << text;
    file.flush();
    if (!file) {
        throw std::runtime_error("failed while writing output path: " + *out_path);
    }
}

struct CompareOptions {
    std::string a;
    std::string b;
    std::optional<std::string> pairs_path;
    std::optional<std::uint64_t> iterations;
    std::string mode = "exact";
    std::uint64_t seed = 0;
    std::optional<std::string> pad_symbol;
    std::string format = "json";
    std::optional<std::string> out_path;
};

struct SweepOptions {
    std::string a;
    std::string b;
    std::optional<std::uint64_t> max_iterations;
    std::optional<std::string> pad_symbol;
    std::string format = "json";
    std::optional<std::string> out_path;
};

struct ValidateOptions {
    std::uint64_t dim = 0;
    std::uint64_t max_iterations = 4;
    std::string format = "json";
    std::optional<std::string> out_path;
};

struct ReportOptions {
    std::string a;
    std::string b;
    std::optional<std::string> pairs_path;
    std::optional<std::uint64_t> iterations;
    std::optional<std::string> pad_symbol;
    std::string format = "json";
    std::optional<std::string> out_path;
};

inline std::vector<std::pair<std::string, std::string>> gather_inputs(
    const std::optional<std::string>& pairs_path, const std::string& a, const std::string& b) {
    if (pairs_path) {
        return read_pairs(*pairs_path);
    }
    if (a.empty() && b.empty()) {
        throw UsageError("provide nonempty --a and --b, or --pairs with a batch file");
    }
    return {{a, b}};
}

inline int run_compare(const CompareOptions& opt, std::ostream& out) {
    const std::optional<char> pad = parse_pad_symbol(opt.pad_symbol);
    const MeasureMode mode =
        opt.mode == "sample" ? MeasureMode::Sample : MeasureMode::Exact;
    const auto inputs = gather_inputs(opt.pairs_path, opt.a, opt.b);

    std::vector<std::string> json_objects;
    std::string csv = csv_header_compare();
    for (const auto& [a, b] : inputs) {
        const ComparisonInstance inst = build_instance(a, b, pad);
        const ComparisonTranscript transcript = compare(inst, opt.iterations, mode, opt.seed);
        if (opt.format == "json") {
            json_objects.push_back(to_json(transcript));
        } else {
            csv += to_csv_row(transcript);
        }
    }

    std::string text;
    if (opt.format == "json") {
        text = opt.pairs_path ? join_json_array(json_objects) : json_objects.front();
    } else {
        text = csv;
    }
    write_output(text, opt.out_path, out);
    return 0;
}

inline int run_sweep(const SweepOptions& opt, std::ostream& out) {
    const std::optional<char> pad = parse_pad_symbol(opt.pad_symbol);
    if (opt.a.empty() || opt.b.empty()) {
        throw UsageError("provide nonempty --a and --b");
    }
    const ComparisonInstance inst = build_instance(opt.a, opt.b, pad);
    const double root = std::sqrt(static_cast<double>(inst.cfg.dim));
    const std::uint64_t max_iterations =
        opt.max_iterations ? *opt.max_iterations
                           : static_cast<std::uint64_t>(std::ceil(2.0 * root));
    if (static_cast<double>(max_iterations) > 10.0 * root) {
        throw UsageError("--max-iterations exceeds the 10*sqrt(N) sweep bound");
    }
    const std::vector<SweepRow> rows = sweep_trajectory(inst, max_iterations);
    const std::string text = opt.format == "json"
                                 ? sweep_to_json(inst, marked_count(inst), max_iterations, rows)
                                 : sweep_to_csv(rows);
    write_output(text, opt.out_path, out);
    return 0;
}

inline int run_validate(const ValidateOptions& opt, std::ostream& out) {
    const ValidationSummary summary = run_validation(opt.dim, opt.max_iterations);
    const std::string text = opt.format == "json" ? to_json(summary) : to_csv(summary);
    write_output(text, opt.out_path, out);
    return summary.pass ? 0 : 1;
}

inline int run_report(const ReportOptions& opt, std::ostream& out) {
    const std::optional<char> pad = parse_pad_symbol(opt.pad_symbol);
    const auto inputs = gather_inputs(opt.pairs_path, opt.a, opt.b);

    std::vector<std::string> json_objects;
    std::string csv = csv_header_report();
    for (const auto& [a, b] : inputs) {
        const ComparisonInstance inst = build_instance(a, b, pad);
        const ClaimReport report = audit_claims(inst, opt.iterations);
        if (opt.format == "json") {
            json_objects.push_back(to_json(report));
        } else {
            csv += to_csv_row(report);
        }
    }

    std::string text;
    if (opt.format == "json") {
        text = opt.pairs_path ? join_json_array(json_objects) : json_objects.front();
    } else {
        text = csv;
    }
    write_output(text, opt.out_path, out);
    return 0;
}

}  // namespace detail

/// Parses argv and dispatches. Streams are injected so tests can capture
/// output without a process boundary.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"State-vector simulator for a Grover-style string-comparison protocol"};
    app.name("qsc");
    app.require_subcommand(1);

    detail::CompareOptions compare_opt;
    CLI::App* compare_cmd =
        app.add_subcommand("compare", "Run one comparison (or a batch) and print the transcript");
    CLI::Option* compare_a = compare_cmd->add_option("--a", compare_opt.a, "First string");
    CLI::Option* compare_b = compare_cmd->add_option("--b", compare_opt.b, "Second string");
    CLI::Option* compare_pairs = compare_cmd->add_option(
        "--pairs", compare_opt.pairs_path, "Batch file, one string per line, consumed in pairs");
    compare_a->needs(compare_b);
    compare_b->needs(compare_a);
    compare_pairs->excludes(compare_a)->excludes(compare_b);
    compare_cmd->add_option("--iterations", compare_opt.iterations,
                            "Grover iteration count k (default floor(pi/4*sqrt(N)))");
    compare_cmd->add_option("--mode", compare_opt.mode, "Measurement mode")
        ->check(CLI::IsMember({"exact", "sample"}))
        ->capture_default_str();
    compare_cmd->add_option("--seed", compare_opt.seed, "Sampling seed (sample mode)")
        ->capture_default_str();
    compare_cmd->add_option("--pad-symbol", compare_opt.pad_symbol,
                            "Reserved padding character (single character)");
    compare_cmd->add_option("--format", compare_opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    compare_cmd->add_option("--out", compare_opt.out_path,
                            "Output path (default standard output)");

    detail::SweepOptions sweep_opt;
    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "Tabulate marked mass and outcome-0 probability for k = 0..K");
    sweep_cmd->add_option("--a", sweep_opt.a, "First string")->required();
    sweep_cmd->add_option("--b", sweep_opt.b, "Second string")->required();
    sweep_cmd->add_option("--max-iterations", sweep_opt.max_iterations,
                          "Largest iteration count K (default ceil(2*sqrt(N)), bound 10*sqrt(N))");
    sweep_cmd->add_option("--pad-symbol", sweep_opt.pad_symbol,
                          "Reserved padding character (single character)");
    sweep_cmd->add_option("--format", sweep_opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sweep_cmd->add_option("--out", sweep_opt.out_path, "Output path (default standard output)");

    detail::ValidateOptions validate_opt;
    CLI::App* validate_cmd = app.add_subcommand(
        "validate", "Cross-check the reduced backend against the full joint register");
    validate_cmd->add_option("--n", validate_opt.dim, "Register dimension N")
        ->required()
        ->check(CLI::IsMember({2, 4}));
    validate_cmd->add_option("--max-iterations", validate_opt.max_iterations,
                             "Largest iteration count replayed per instance")
        ->capture_default_str();
    validate_cmd->add_option("--format", validate_opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    validate_cmd->add_option("--out", validate_opt.out_path,
                             "Output path (default standard output)");

    detail::ReportOptions report_opt;
    CLI::App* report_cmd =
        app.add_subcommand("report", "Audit the protocol claims on one instance (or a batch)");
    CLI::Option* report_a = report_cmd->add_option("--a", report_opt.a, "First string");
    CLI::Option* report_b = report_cmd->add_option("--b", report_opt.b, "Second string");
    CLI::Option* report_pairs = report_cmd->add_option(
        "--pairs", report_opt.pairs_path, "Batch file, one string per line, consumed in pairs");
    report_a->needs(report_b);
    report_b->needs(report_a);
    report_pairs->excludes(report_a)->excludes(report_b);
    report_cmd->add_option("--iterations", report_opt.iterations,
                           "Audited iteration count k (default floor(pi/4*sqrt(N)))");
    report_cmd->add_option("--pad-symbol", report_opt.pad_symbol,
                           "Reserved padding character (single character)");
    report_cmd->add_option("--format", report_opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    report_cmd->add_option("--out", report_opt.out_path, "Output path (default standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compare_cmd->parsed()) {
            return detail::run_compare(compare_opt, out);
        }
        if (sweep_cmd->parsed()) {
            return detail::run_sweep(sweep_opt, out);
        }
        if (validate_cmd->parsed()) {
            return detail::run_validate(validate_opt, out);
        }
        return detail::run_report(report_opt, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

/// Convenience overload for in-process tests: args exclude the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("qsc");
    for (const std::string& arg : args) {
        argv.push_back(arg.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qsc::cli
