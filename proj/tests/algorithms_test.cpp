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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "qmatops/algorithms.hpp"
#include "qmatops/oracle.hpp"
#include "test_support.hpp"

using namespace qmatops;
using Catch::Approx;
using test_support::matrix_from;

namespace {

const double kInvSqrt2 = 1 / std::sqrt(2.0);

std::vector<std::string> stage_names(const AlgorithmResult<double>& result) {
    std::vector<std::string> names;
    for (const auto& record : result.trace) names.push_back(record.stage);
    return names;
}

}  // namespace

TEST_CASE("entrywise product of the identity with itself", "[algorithms]") {
    auto eye = matrix_from({{1.0, 0.0}, {0.0, 1.0}});
    AlgorithmResult<double> result = hadamard_product(eye, eye);

    CHECK(result.success_probability == Approx(0.125).margin(1e-12));
    // Normalized operands are I/sqrt(2); their entrywise product is I/2.
    auto expected = matrix_from({{0.5, 0.0}, {0.0, 0.5}});
    CHECK(test_support::max_abs_diff(decode_matrix(result.output), expected) < 1e-12);

    CHECK(result.stats.pattern_controlled_x_count == 6);
    CHECK(result.stats.total_control_qubits == 15);
    CHECK(result.stats.hadamard_count == 2);
    CHECK(result.stats.cswap_count == 0);
    CHECK(result.stats.swap_count == 0);
    CHECK(result.stats.depth_layers == 7);
}

TEST_CASE("entrywise product matches the classical reference", "[algorithms]") {
    auto rng = test_support::make_rng(41);
    const std::pair<int, int> shapes[] = {{2, 2}, {2, 4}, {4, 4}, {4, 8}};
    for (const auto& [rows, cols] : shapes) {
        auto a = test_support::random_matrix(rng, rows, cols);
        auto b = test_support::random_matrix(rng, rows, cols);
        AlgorithmResult<double> result = hadamard_product(a, b);

        auto expected = classical_hadamard_product(a, b);
        CHECK(test_support::rescaled_diff(expected, decode_matrix(result.output)) < 1e-9);
        CHECK(std::abs(result.success_probability -
                       expected_probability(Algorithm::hadamard, a, b)) < 1e-10);

        NormalizationG<double> g = hadamard_normalization(a, b);
        CHECK(g.value <= g.upper_bound + 1e-12);
        CHECK(result.success_probability ==
              Approx(g.value * g.value / (rows * cols)).margin(1e-12));
    }
}

TEST_CASE("entrywise product stats depend on shape only", "[algorithms]") {
    auto rng = test_support::make_rng(42);
    for (std::size_t n = 1; n <= 2; ++n)
        for (std::size_t m = 1; m <= 3; ++m) {
            GateStats seen[2];
            for (auto& stats : seen) {
                auto a = test_support::random_matrix(rng, 1 << n, 1 << m);
                auto b = test_support::random_matrix(rng, 1 << n, 1 << m);
                stats = hadamard_product(a, b).stats;
            }
            CHECK(seen[0] == seen[1]);
            CHECK(seen[0].pattern_controlled_x_count == 2 * n + 2 * m + 2);
            CHECK(seen[0].total_control_qubits == 7 * (n + m) + 1);
            CHECK(seen[0].hadamard_count == n + m);
            CHECK(seen[0].depth_layers == 7);
        }
}

TEST_CASE("entrywise product trace has unit-norm stages and the G^2 checkpoint",
          "[algorithms]") {
    auto rng = test_support::make_rng(43);
    auto a = test_support::random_matrix(rng, 4, 4);
    auto b = test_support::random_matrix(rng, 4, 4);
    AlgorithmResult<double> result = hadamard_product(a, b, true);

    CHECK(stage_names(result) ==
          std::vector<std::string>{"Phi0", "Phi1", "Phi2", "Phi3", "Phi4", "Phi5", "Phi6"});
    for (const auto& record : result.trace) CHECK(std::abs(record.norm - 1.0) < 1e-10);

    // After the diagonal flag, the marked mass is exactly G^2.
    NormalizationG<double> g = hadamard_normalization(a, b);
    CHECK(result.trace[3].flag_mass.at("B3=1") == Approx(g.value * g.value).margin(1e-10));
    // After the final flag, the marked mass is the success probability.
    CHECK(result.trace[5].flag_mass.at("B4=1") ==
          Approx(result.success_probability).margin(1e-12));
}

TEST_CASE("entrywise product rejects bad inputs", "[algorithms]") {
    auto eye = matrix_from({{1.0, 0.0}, {0.0, 1.0}});
    CHECK_THROWS_AS(hadamard_product<double>(eye, ComplexMatrix<double>::Ones(2, 4)),
                    DimensionMismatchError);
    // Disjoint supports leave nothing on the success branch.
    auto upper = matrix_from({{1.0, 0.0}, {0.0, 0.0}});
    auto lower = matrix_from({{0.0, 0.0}, {0.0, 1.0}});
    CHECK_THROWS_AS(hadamard_product(upper, lower), PostSelectionImpossibleError);
}

TEST_CASE("Kronecker product of identity and the bit flip", "[algorithms]") {
    auto eye = matrix_from({{1.0, 0.0}, {0.0, 1.0}});
    auto x = matrix_from({{0.0, 1.0}, {1.0, 0.0}});
    AlgorithmResult<double> result = kronecker_product(eye, x);

    CHECK(result.success_probability == 1.0);
    auto expected = classical_kronecker_product(eye, x) / 2.0;  // normalized factors
    CHECK(test_support::max_abs_diff(decode_matrix(result.output), expected) < 1e-15);
    CHECK(result.stats.swap_count == 1);
    CHECK(result.stats.depth_layers == 1);
    CHECK(result.stats.pattern_controlled_x_count == 0);
}

TEST_CASE("coupled Kronecker product matches the classical reference", "[algorithms]") {
    auto rng = test_support::make_rng(44);
    for (std::size_t n = 1; n <= 2; ++n)
        for (std::size_t m = 1; m <= 2; ++m)
            for (std::size_t k = 1; k <= 2; ++k) {
                auto a = test_support::random_matrix(rng, 1 << n, 1 << m);
                auto b = test_support::random_matrix(rng, 1 << m, 1 << k);
                AlgorithmResult<double> result = kronecker_product(a, b);

                auto expected = classical_kronecker_product(a, b);
                CHECK(test_support::rescaled_diff(expected, decode_matrix(result.output)) <
                      1e-12);
                CHECK(result.success_probability == 1.0);
                CHECK(result.stats.swap_count == m);
                CHECK(result.stats.depth_layers == 1);
            }
}

TEST_CASE("general Kronecker product lifts the coupling restriction", "[algorithms]") {
    auto rng = test_support::make_rng(45);
    auto a = test_support::random_matrix(rng, 2, 4);  // m = 2
    auto b = test_support::random_matrix(rng, 2, 2);  // rows != 4

    CHECK_THROWS_AS(kronecker_product(a, b), DimensionMismatchError);

    AlgorithmResult<double> result = kronecker_product(a, b, KroneckerShape::general);
    auto expected = classical_kronecker_product(a, b);
    CHECK(test_support::rescaled_diff(expected, decode_matrix(result.output)) < 1e-12);
    // The general shape reorders registers as a pure index relabeling.
    CHECK(result.stats == GateStats{});
    CHECK(result.success_probability == 1.0);
}

TEST_CASE("column addition on the identity", "[algorithms]") {
    auto eye = matrix_from({{1.0, 0.0}, {0.0, 1.0}});
    AlgorithmResult<double> result = column_addition(eye, 0, 1);

    CHECK(result.success_probability == Approx(3.0 / 16).margin(1e-12));
    auto expected = matrix_from({{kInvSqrt2, kInvSqrt2}, {0.0, kInvSqrt2}});
    CHECK(test_support::max_abs_diff(decode_matrix(result.output), expected) < 1e-12);

    CHECK(result.stats.pattern_controlled_x_count == 4);
    CHECK(result.stats.total_control_qubits == 2 * 1 + 6);
    CHECK(result.stats.cswap_count == 1);
    CHECK(result.stats.hadamard_count == 2);
    CHECK(result.stats.depth_layers == 6);
}

TEST_CASE("column addition matches the classical reference", "[algorithms]") {
    auto rng = test_support::make_rng(46);
    for (const auto& [rows, cols] : {std::pair<int, int>{4, 4}, {4, 8}}) {
        auto a = test_support::random_matrix(rng, rows, cols);
        for (BasisValue k = 0; k < 3; ++k)
            for (BasisValue l = 0; l < 3; ++l) {
                if (k == l) continue;
                AlgorithmResult<double> result = column_addition(a, k, l, true);

                auto expected = classical_column_addition(a, k, l);
                CHECK(test_support::rescaled_diff(expected, decode_matrix(result.output)) <
                      1e-9);
                CHECK(std::abs(result.success_probability -
                               expected_probability(Algorithm::column_add, a, k, l)) < 1e-10);

                NormalizationG<double> g = column_add_normalization(a, k, l);
                CHECK(g.value <= g.upper_bound + 1e-12);
                CHECK(stage_names(result) ==
                      std::vector<std::string>{"Phi0", "Phi1", "Phi2", "Phi3", "Phi4", "Phi5",
                                               "Phi6", "Phi7"});
                for (const auto& record : result.trace)
                    CHECK(std::abs(record.norm - 1.0) < 1e-10);
            }
    }
}

TEST_CASE("column addition stats depend on the column width only", "[algorithms]") {
    auto rng = test_support::make_rng(47);
    for (std::size_t m = 1; m <= 3; ++m) {
        auto a = test_support::random_matrix(rng, 2, 1 << m);
        GateStats stats = column_addition(a, 0, 1).stats;
        CHECK(stats.pattern_controlled_x_count == 4);
        CHECK(stats.total_control_qubits == 2 * m + 6);
        CHECK(stats.cswap_count == m);
        CHECK(stats.hadamard_count == 2);
        CHECK(stats.depth_layers == 6);
    }
}

TEST_CASE("column operations validate their indices", "[algorithms]") {
    auto rng = test_support::make_rng(48);
    auto a = test_support::random_matrix(rng, 2, 4);
    CHECK_THROWS_AS(column_addition(a, 1, 1), EqualColumnsError);
    CHECK_THROWS_AS(column_addition(a, 0, 4), ColumnIndexOutOfRangeError);
    CHECK_THROWS_AS(column_swap(a, 2, 2), EqualColumnsError);
    CHECK_THROWS_AS(column_swap(a, 5, 1), ColumnIndexOutOfRangeError);
}

TEST_CASE("column swap success probability is input independent", "[algorithms]") {
    auto rng = test_support::make_rng(49);
    for (int draw = 0; draw < 5; ++draw) {
        auto a = test_support::random_matrix(rng, 4, 8);
        AlgorithmResult<double> result = column_swap(a, 2, 6);
        CHECK(std::abs(result.success_probability - 1.0 / 24) < 1e-12);

        auto expected = classical_column_swap(a, 2, 6);
        CHECK(test_support::rescaled_diff(expected, decode_matrix(result.output)) < 1e-9);
    }
}

TEST_CASE("column swap matches the classical reference on all pairs", "[algorithms]") {
    auto rng = test_support::make_rng(50);
    auto a = test_support::random_matrix(rng, 2, 4);
    for (BasisValue k = 0; k < 4; ++k)
        for (BasisValue l = 0; l < 4; ++l) {
            if (k == l) continue;
            AlgorithmResult<double> result = column_swap(a, k, l, true);
            auto expected = classical_column_swap(a, k, l);
            CHECK(test_support::rescaled_diff(expected, decode_matrix(result.output)) < 1e-9);
            CHECK(stage_names(result).size() == 8);
            for (const auto& record : result.trace)
                CHECK(std::abs(record.norm - 1.0) < 1e-10);
        }
}

TEST_CASE("column swap stats depend on the column width only", "[algorithms]") {
    auto rng = test_support::make_rng(51);
    for (std::size_t m = 1; m <= 3; ++m) {
        auto a = test_support::random_matrix(rng, 2, 1 << m);
        GateStats stats = column_swap(a, 0, 1).stats;
        CHECK(stats.pattern_controlled_x_count == 7);
        CHECK(stats.total_control_qubits == 6 * m + 13);
        CHECK(stats.cswap_count == 2 * m);
        CHECK(stats.hadamard_count == 3);
        CHECK(stats.depth_layers == 10);
    }
}
