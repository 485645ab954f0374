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
 * Gate-count scaling sweeps. For each problem size the pipeline runs on
 * three independent random inputs and the sweep insists the statistics
 * agree, since circuit cost must depend on shape only, never on values.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qmatops/algorithms.hpp"
#include "qmatops/core.hpp"
#include "qmatops/encoding.hpp"
#include "qmatops/gates.hpp"

namespace qmatops {

/// One sweep point: register widths and the measured circuit cost.
struct SweepRow {
    std::size_t n = 0;
    std::size_t m = 0;
    GateStats stats;
};

namespace detail {

inline double unit_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename Scalar = double>
ComplexMatrix<Scalar> random_sweep_matrix(std::mt19937_64& rng, std::size_t rows,
                                          std::size_t cols) {
    ComplexMatrix<Scalar> out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index s = 0; s < out.rows(); ++s)
        for (Eigen::Index t = 0; t < out.cols(); ++t)
            out(s, t) = std::complex<Scalar>(Scalar(2 * unit_uniform(rng) - 1),
                                             Scalar(2 * unit_uniform(rng) - 1));
    return out;
}

}  // namespace detail

/// Runs the chosen pipeline over a range of sizes and reports gate
/// statistics per size. The entrywise product sweeps every (n, m) split of
/// each total width in [min_size, max_size]; the other operations hold the
/// row register at one qubit and sweep the column register width m through
/// the range (Kronecker uses coupled 2 x 2^m by 2^m x 2 factors; the column
/// operations act on columns 0 and 1). Three random draws per point must
/// produce identical statistics.
template <typename Scalar = double>
std::vector<SweepRow> stats_sweep(Algorithm algorithm, std::size_t min_size, std::size_t max_size,
                                  std::uint64_t seed) {
    if (min_size < 1 || max_size < min_size)
        throw ValueOutOfRangeError("sweep range must satisfy 1 <= min <= max");
    std::mt19937_64 rng(seed);

    auto measure = [](std::size_t n, std::size_t m, auto&& run_draw) -> GateStats {
        GateStats first;
        for (int draw = 0; draw < 3; ++draw) {
            GateStats current = run_draw();
            if (draw == 0)
                first = current;
            else if (current != first)
                throw Error("gate statistics varied across random inputs at size n=" +
                            std::to_string(n) + ", m=" + std::to_string(m));
        }
        return first;
    };

    std::vector<SweepRow> rows;
    switch (algorithm) {
        case Algorithm::hadamard:
            for (std::size_t total = std::max<std::size_t>(min_size, 2); total <= max_size;
                 ++total)
                for (std::size_t n = 1; n < total; ++n) {
                    const std::size_t m = total - n;
                    GateStats stats = measure(n, m, [&] {
                        auto a = detail::random_sweep_matrix<Scalar>(rng, std::size_t{1} << n,
                                                                     std::size_t{1} << m);
                        auto b = detail::random_sweep_matrix<Scalar>(rng, std::size_t{1} << n,
                                                                     std::size_t{1} << m);
                        return hadamard_product(a, b).stats;
                    });
                    rows.push_back(SweepRow{n, m, stats});
                }
            break;
        case Algorithm::kronecker:
            for (std::size_t m = min_size; m <= max_size; ++m) {
                GateStats stats = measure(1, m, [&] {
                    auto a = detail::random_sweep_matrix<Scalar>(rng, 2, std::size_t{1} << m);
                    auto b = detail::random_sweep_matrix<Scalar>(rng, std::size_t{1} << m, 2);
                    return kronecker_product(a, b).stats;
                });
                rows.push_back(SweepRow{1, m, stats});
            }
            break;
        case Algorithm::column_add:
            for (std::size_t m = min_size; m <= max_size; ++m) {
                GateStats stats = measure(1, m, [&] {
                    auto a = detail::random_sweep_matrix<Scalar>(rng, 2, std::size_t{1} << m);
                    return column_addition(a, 0, 1).stats;
                });
                rows.push_back(SweepRow{1, m, stats});
            }
            break;
        case Algorithm::column_swap:
            for (std::size_t m = min_size; m <= max_size; ++m) {
                GateStats stats = measure(1, m, [&] {
                    auto a = detail::random_sweep_matrix<Scalar>(rng, 2, std::size_t{1} << m);
                    return column_swap(a, 0, 1).stats;
                });
                rows.push_back(SweepRow{1, m, stats});
            }
            break;
    }
    return rows;
}

inline std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::string out =
        "n,m,pattern_controlled_x_count,total_control_qubits,cswap_count,swap_count,depth_layers\n";
    for (const SweepRow& row : rows) {
        out += std::to_string(row.n) + ',' + std::to_string(row.m) + ',' +
               std::to_string(row.stats.pattern_controlled_x_count) + ',' +
               std::to_string(row.stats.total_control_qubits) + ',' +
               std::to_string(row.stats.cswap_count) + ',' +
               std::to_string(row.stats.swap_count) + ',' +
               std::to_string(row.stats.depth_layers) + '\n';
    }
    return out;
}

}  // namespace qmatops
