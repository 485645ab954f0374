// Copyright 2026 The qmatops Authors
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

/**
 * @file
 * Command execution behind the CLI binary: load inputs, run a pipeline,
 * emit a JSON report (and optional CSV sweep), map errors to exit codes.
 *
 * Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
 * 3 post-selection impossible, 4 qubit cap exceeded.
 */

#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "qmatops/algorithms.hpp"
#include "qmatops/core.hpp"
#include "qmatops/encoding.hpp"
#include "qmatops/matrix_json.hpp"
#include "qmatops/oracle.hpp"
#include "qmatops/sweep.hpp"

namespace qmatops {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitPostSelectionImpossible = 3;
inline constexpr int kExitQubitCapExceeded = 4;

struct RunConfig {
    Algorithm algorithm = Algorithm::hadamard;
    bool verify = false;
    std::vector<std::string> input_paths;
    long long k = 0;
    long long l = 1;
    bool trace = false;
    bool stats = false;
    long long sample_count = 0;
    std::uint64_t seed = 0;
    bool general = false;
    std::string out_path;  // empty writes to stdout
};

namespace detail {

inline void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot open output file '" + out_path + "'");
    out << text;
}

/// Simulated repeated measurement: `count` Bernoulli draws at probability
/// `p` from a seeded generator, so reports are reproducible byte for byte.
inline Json sample_outcomes(double p, long long count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    long long successes = 0;
    for (long long i = 0; i < count; ++i)
        if (unit_uniform(rng) < p) ++successes;
    return Json{{"count", count},
                {"successes", successes},
                {"frequency", static_cast<double>(successes) / static_cast<double>(count)}};
}

}  // namespace detail

/// Executes one pipeline run per the config and writes the JSON report.
/// Returns the process exit code.
inline int run(const RunConfig& config) {
    try {
        const bool two_operands =
            config.algorithm == Algorithm::hadamard || config.algorithm == Algorithm::kronecker;
        const std::size_t expected_inputs = two_operands ? 2 : 1;
        if (config.input_paths.size() != expected_inputs)
            throw ValueOutOfRangeError("operation '" +
                                       std::string(algorithm_name(config.algorithm)) +
                                       "' expects " + std::to_string(expected_inputs) +
                                       " input file(s), got " +
                                       std::to_string(config.input_paths.size()));
        if (!two_operands && (config.k < 0 || config.l < 0))
            throw ColumnIndexOutOfRangeError("column indices must be nonnegative");

        ComplexMatrix<double> a = load_matrix_file(config.input_paths[0]);
        ComplexMatrix<double> b;
        if (two_operands) b = load_matrix_file(config.input_paths[1]);
        const BasisValue k = static_cast<BasisValue>(config.k);
        const BasisValue l = static_cast<BasisValue>(config.l);

        AlgorithmResult<double> result;
        switch (config.algorithm) {
            case Algorithm::hadamard:
                result = hadamard_product(a, b, config.trace);
                break;
            case Algorithm::kronecker:
                result = kronecker_product(
                    a, b, config.general ? KroneckerShape::general : KroneckerShape::coupled,
                    config.trace);
                break;
            case Algorithm::column_add:
                result = column_addition(a, k, l, config.trace);
                break;
            case Algorithm::column_swap:
                result = column_swap(a, k, l, config.trace);
                break;
        }
        const ComplexMatrix<double> decoded = decode_matrix(result.output);

        Json report;
        report["algorithm"] = algorithm_name(config.algorithm);
        report["success_probability"] = result.success_probability;
        report["gate_stats"] = gate_stats_to_json(result.stats);
        report["decoded_matrix"] = matrix_to_json(decoded);
        if (config.trace) report["trace"] = trace_to_json(result.trace);
        if (config.sample_count > 0)
            report["samples"] = detail::sample_outcomes(result.success_probability,
                                                        config.sample_count, config.seed);

        bool verified = true;
        if (config.verify) {
            ComplexMatrix<double> expected;
            double probability_expected = 0;
            switch (config.algorithm) {
                case Algorithm::hadamard:
                    expected = classical_hadamard_product(a, b);
                    probability_expected = expected_probability(config.algorithm, a, b);
                    break;
                case Algorithm::kronecker:
                    expected = classical_kronecker_product(a, b);
                    probability_expected = expected_probability(config.algorithm, a, b);
                    break;
                case Algorithm::column_add:
                    expected = classical_column_addition(a, k, l);
                    probability_expected = expected_probability(config.algorithm, a, k, l);
                    break;
                case Algorithm::column_swap:
                    expected = classical_column_swap(a, k, l);
                    probability_expected = expected_probability(config.algorithm, a, k, l);
                    break;
            }
            OracleReport<double> oracle =
                compare_with_oracle(std::move(expected), decoded, probability_expected,
                                    result.success_probability);
            report["oracle"] = oracle_report_to_json(oracle);
            verified = oracle.max_abs_diff <= kEntrywiseTolerance<double> &&
                       std::abs(oracle.probability_observed - oracle.probability_expected) <=
                           1e-10;
        }

        detail::write_output(report.dump(2) + "\n", config.out_path);

        if (config.stats) {
            std::fprintf(stderr, "%s: success probability %.15g\n",
                         algorithm_name(config.algorithm), result.success_probability);
            std::fprintf(stderr,
                         "gates: %zu pattern-controlled X (%zu control qubits), %zu cswap, "
                         "%zu swap, %zu hadamard; depth %zu layers\n",
                         result.stats.pattern_controlled_x_count,
                         result.stats.total_control_qubits, result.stats.cswap_count,
                         result.stats.swap_count, result.stats.hadamard_count,
                         result.stats.depth_layers);
        }
        if (config.verify && !verified) {
            std::fprintf(stderr, "verification FAILED against the classical reference\n");
            return kExitVerifyFailed;
        }
        return kExitSuccess;
    } catch (const PostSelectionImpossibleError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitPostSelectionImpossible;
    } catch (const QubitCapExceededError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitQubitCapExceeded;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInvalidInput;
    }
}

/// Executes a scaling sweep and writes the CSV table.
inline int run_stats_sweep(Algorithm algorithm, std::size_t min_size, std::size_t max_size,
                           std::uint64_t seed, const std::string& out_path) {
    try {
        detail::write_output(sweep_to_csv(stats_sweep(algorithm, min_size, max_size, seed)),
                             out_path);
        return kExitSuccess;
    } catch (const QubitCapExceededError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitQubitCapExceeded;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInvalidInput;
    }
}

}  // namespace qmatops
