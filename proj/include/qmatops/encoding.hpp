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
 * Amplitude encoding of complex matrices. A 2^n x 2^m matrix becomes a
 * unit state over a row register (n qubits) and a column register
 * (m qubits): entry (s, t) divided by the Frobenius norm lands on basis
 * state |s>|t>. The norm is kept alongside as `scale` so the matrix can be
 * recovered exactly.
 */

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "qmatops/core.hpp"
#include "qmatops/qstate.hpp"
#include "qmatops/register_layout.hpp"

namespace qmatops {

template <typename Scalar = double>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

/// A matrix held as (state, registers, scale): the matrix equals
/// scale * amplitudes reshaped by (row_reg, col_reg).
template <typename Scalar = double>
struct EncodedMatrix {
    QState<Scalar> state;
    std::string row_reg;
    std::string col_reg;
    Scalar scale = Scalar(1);
};

namespace detail {

inline bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

inline std::size_t log2_exact(std::size_t x) {
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < x) ++bits;
    return bits;
}

/// Shared guard for operations addressing two distinct columns.
inline void validate_column_pair(std::size_t cols, BasisValue k, BasisValue l) {
    if (k >= cols || l >= cols)
        throw ColumnIndexOutOfRangeError("column indices " + std::to_string(k) + ", " +
                                         std::to_string(l) + " must be below " +
                                         std::to_string(cols));
    if (k == l) throw EqualColumnsError("column indices must differ");
}

}  // namespace detail

/// Encodes `a` into registers named `row_reg` and `col_reg` (row register
/// more significant). Dimensions must be powers of two, at least 2 each,
/// and the matrix must be nonzero.
template <typename Scalar>
EncodedMatrix<Scalar> encode_matrix(const ComplexMatrix<Scalar>& a, std::string row_reg,
                                    std::string col_reg) {
    const std::size_t rows = static_cast<std::size_t>(a.rows());
    const std::size_t cols = static_cast<std::size_t>(a.cols());
    if (rows < 2 || cols < 2 || !detail::is_power_of_two(rows) || !detail::is_power_of_two(cols))
        throw NonPowerOfTwoError("matrix must be 2^n x 2^m with n, m >= 1; got " +
                                 std::to_string(rows) + " x " + std::to_string(cols));
    const Scalar fro = a.norm();
    if (fro == Scalar(0)) throw ZeroMatrixError("cannot encode the zero matrix");

    const std::size_t n = detail::log2_exact(rows);
    const std::size_t m = detail::log2_exact(cols);
    RegisterLayout layout({Register{row_reg, n}, Register{col_reg, m}});
    typename QState<Scalar>::Vector amps(static_cast<Eigen::Index>(layout.dimension()));
    for (std::size_t s = 0; s < rows; ++s)
        for (std::size_t t = 0; t < cols; ++t)
            amps[static_cast<Eigen::Index>((s << m) | t)] =
                a(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t)) / fro;
    return EncodedMatrix<Scalar>{QState<Scalar>(std::move(layout), std::move(amps)),
                                 std::move(row_reg), std::move(col_reg), fro};
}

/// Recovers the matrix from an encoded state. Registers other than the row
/// and column registers must be concentrated on a single basis value; any
/// mass elsewhere beyond kNormTolerance means the state is still entangled
/// with work registers and cannot be read as a matrix.
template <typename Scalar>
ComplexMatrix<Scalar> decode_matrix(const EncodedMatrix<Scalar>& encoded) {
    const QState<Scalar>& state = encoded.state;
    const RegisterLayout& layout = state.layout();
    const std::size_t n = layout.width(encoded.row_reg);
    const std::size_t m = layout.width(encoded.col_reg);
    const BasisValue row_mask = layout.mask(encoded.row_reg);
    const BasisValue col_mask = layout.mask(encoded.col_reg);
    const BasisValue residual_mask = ~(row_mask | col_mask);

    // Mass carried by each assignment of the residual registers.
    std::map<BasisValue, Scalar> residual_mass;
    for (std::size_t x = 0; x < state.dimension(); ++x) {
        const Scalar mass = std::norm(state.amplitudes()[static_cast<Eigen::Index>(x)]);
        if (mass > Scalar(0)) residual_mass[static_cast<BasisValue>(x) & residual_mask] += mass;
    }

    BasisValue dominant = 0;
    Scalar dominant_mass = Scalar(-1);
    Scalar total = Scalar(0);
    for (const auto& [value, mass] : residual_mass) {
        total += mass;
        if (mass > dominant_mass) {
            dominant_mass = mass;
            dominant = value;
        }
    }
    if (total - dominant_mass > kNormTolerance<Scalar>)
        throw ResidualEntanglementError(
            "state carries " + std::to_string(static_cast<double>(total - dominant_mass)) +
            " probability mass outside the dominant residual assignment");

    ComplexMatrix<Scalar> out(static_cast<Eigen::Index>(std::size_t{1} << n),
                              static_cast<Eigen::Index>(std::size_t{1} << m));
    const std::size_t row_shift = layout.shift(encoded.row_reg);
    const std::size_t col_shift = layout.shift(encoded.col_reg);
    for (std::size_t s = 0; s < (std::size_t{1} << n); ++s)
        for (std::size_t t = 0; t < (std::size_t{1} << m); ++t) {
            const BasisValue global = dominant | (static_cast<BasisValue>(s) << row_shift) |
                                      (static_cast<BasisValue>(t) << col_shift);
            out(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t)) =
                encoded.scale * state.amplitudes()[static_cast<Eigen::Index>(global)];
        }
    return out;
}

}  // namespace qmatops
