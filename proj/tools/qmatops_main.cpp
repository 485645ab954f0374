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

// Command-line front end. Subcommands run one matrix operation each and
// print a JSON report; `verify` additionally checks the result against the
// classical reference, and `stats-sweep` prints a CSV gate-count table.

#include <CLI11.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmatops/cli.hpp"

namespace {

qmatops::Algorithm parse_algorithm(const std::string& name) {
    if (name == "hadamard") return qmatops::Algorithm::hadamard;
    if (name == "kron") return qmatops::Algorithm::kronecker;
    if (name == "col-add") return qmatops::Algorithm::column_add;
    if (name == "col-swap") return qmatops::Algorithm::column_swap;
    throw std::logic_error("unreachable: operation name already validated");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"statevector simulation of matrix operations on register-encoded data"};
    app.require_subcommand(1);

    qmatops::RunConfig config;
    std::string verify_operation;
    std::string sweep_operation;
    std::size_t sweep_min = 1;
    std::size_t sweep_max = 1;
    const std::vector<std::string> operation_names{"hadamard", "kron", "col-add", "col-swap"};

    auto add_run_flags = [&config](CLI::App* sub) {
        sub->add_flag("--trace", config.trace, "record a stage-by-stage trace in the report");
        sub->add_flag("--stats", config.stats, "print a human-readable summary to stderr");
        sub->add_option("--sample", config.sample_count,
                        "simulate this many measurement rounds");
        sub->add_option("--seed", config.seed, "seed for the simulated measurement rounds");
        sub->add_option("--out", config.out_path, "write the report to this file, not stdout");
    };
    auto add_column_flags = [&config](CLI::App* sub, bool required) {
        CLI::Option* k = sub->add_option("--k", config.k, "first column index");
        CLI::Option* l = sub->add_option("--l", config.l, "second column index");
        if (required) {
            k->required();
            l->required();
        }
    };

    CLI::App* hadamard = app.add_subcommand("hadamard", "entrywise product of two matrices");
    hadamard->add_option("inputs", config.input_paths, "two matrix JSON files")
        ->required()
        ->expected(2);
    add_run_flags(hadamard);

    CLI::App* kron = app.add_subcommand("kron", "Kronecker product of two matrices");
    kron->add_option("inputs", config.input_paths, "two matrix JSON files")
        ->required()
        ->expected(2);
    kron->add_flag("--general", config.general,
                   "allow factors whose inner dimensions are not coupled");
    add_run_flags(kron);

    CLI::App* col_add = app.add_subcommand("col-add", "add column k into column l");
    col_add->add_option("input", config.input_paths, "matrix JSON file")->required()->expected(1);
    add_column_flags(col_add, true);
    add_run_flags(col_add);

    CLI::App* col_swap = app.add_subcommand("col-swap", "exchange columns k and l");
    col_swap->add_option("input", config.input_paths, "matrix JSON file")->required()->expected(1);
    add_column_flags(col_swap, true);
    add_run_flags(col_swap);

    CLI::App* verify = app.add_subcommand(
        "verify", "run an operation and check it against the classical reference");
    verify->add_option("operation", verify_operation, "one of hadamard|kron|col-add|col-swap")
        ->required()
        ->check(CLI::IsMember(operation_names));
    verify->add_option("inputs", config.input_paths, "matrix JSON file(s)")
        ->required()
        ->expected(-1);
    verify->add_flag("--general", config.general,
                     "allow Kronecker factors whose inner dimensions are not coupled");
    add_column_flags(verify, false);
    add_run_flags(verify);

    CLI::App* sweep =
        app.add_subcommand("stats-sweep", "print a CSV table of gate counts across sizes");
    sweep->add_option("operation", sweep_operation, "one of hadamard|kron|col-add|col-swap")
        ->required()
        ->check(CLI::IsMember(operation_names));
    sweep->add_option("min", sweep_min, "smallest size (total width for hadamard, else column width)")
        ->required();
    sweep->add_option("max", sweep_max, "largest size")->required();
    sweep->add_option("--seed", config.seed, "seed for the random draws");
    sweep->add_option("--out", config.out_path, "write the CSV to this file, not stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return qmatops::kExitInvalidInput;
    }

    if (sweep->parsed())
        return qmatops::run_stats_sweep(parse_algorithm(sweep_operation), sweep_min, sweep_max,
                                        config.seed, config.out_path);
    if (hadamard->parsed()) config.algorithm = qmatops::Algorithm::hadamard;
    if (kron->parsed()) config.algorithm = qmatops::Algorithm::kronecker;
    if (col_add->parsed()) config.algorithm = qmatops::Algorithm::column_add;
    if (col_swap->parsed()) config.algorithm = qmatops::Algorithm::column_swap;
    if (verify->parsed()) {
        config.algorithm = parse_algorithm(verify_operation);
        config.verify = true;
    }
    return qmatops::run(config);
}
