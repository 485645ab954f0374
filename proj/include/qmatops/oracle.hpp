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
 * Classical reference implementations of the four matrix operations and
 * their closed-form success probabilities. Deliberately independent of the
 * pipelines (plain dense arithmetic only) so the two sides can check each
 * other.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <string>

#include "qmatops/core.hpp"
#include "qmatops/encoding.hpp"

namespace qmatops {

template <typename Scalar>
ComplexMatrix<Scalar> classical_hadamard_product(const ComplexMatrix<Scalar>& a,
                                                 const ComplexMatrix<Scalar>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatchError("entrywise product requires equal shapes");
    return a.cwiseProduct(b);
}

template <typename Scalar>
ComplexMatrix<Scalar> classical_kronecker_product(const ComplexMatrix<Scalar>& a,
                                                  const ComplexMatrix<Scalar>& b) {
    ComplexMatrix<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

template <typename Scalar>
ComplexMatrix<Scalar> classical_column_addition(const ComplexMatrix<Scalar>& a, BasisValue k,
                                                BasisValue l) {
    detail::validate_column_pair(static_cast<std::size_t>(a.cols()), k, l);
    ComplexMatrix<Scalar> out = a;
    out.col(static_cast<Eigen::Index>(l)) += a.col(static_cast<Eigen::Index>(k));
    return out;
}

template <typename Scalar>
ComplexMatrix<Scalar> classical_column_swap(const ComplexMatrix<Scalar>& a, BasisValue k,
                                            BasisValue l) {
    detail::validate_column_pair(static_cast<std::size_t>(a.cols()), k, l);
    ComplexMatrix<Scalar> out = a;
    out.col(static_cast<Eigen::Index>(k)).swap(out.col(static_cast<Eigen::Index>(l)));
    return out;
}

template <typename Scalar>
ComplexMatrix<Scalar> normalize_frobenius(const ComplexMatrix<Scalar>& a) {
    const Scalar n = a.norm();
    if (n == Scalar(0)) throw ZeroMatrixError("cannot normalize the zero matrix");
    return a / n;
}

/// Closed-form success probability for the two-operand operations.
template <typename Scalar>
Scalar expected_probability(Algorithm algorithm, const ComplexMatrix<Scalar>& a,
                            const ComplexMatrix<Scalar>& b) {
    switch (algorithm) {
        case Algorithm::hadamard: {
            if (a.rows() != b.rows() || a.cols() != b.cols())
                throw DimensionMismatchError("entrywise product requires equal shapes");
            const Scalar g2 =
                normalize_frobenius(a).cwiseProduct(normalize_frobenius(b)).squaredNorm();
            return g2 / Scalar(a.rows() * a.cols());
        }
        case Algorithm::kronecker:
            return Scalar(1);
        default:
            throw ValueOutOfRangeError("this operation takes column indices, not two operands");
    }
}

/// Closed-form success probability for the column operations.
template <typename Scalar>
Scalar expected_probability(Algorithm algorithm, const ComplexMatrix<Scalar>& a, BasisValue k,
                            BasisValue l) {
    switch (algorithm) {
        case Algorithm::column_add: {
            ComplexMatrix<Scalar> added =
                classical_column_addition(normalize_frobenius(a), k, l);
            return added.squaredNorm() / Scalar(8);
        }
        case Algorithm::column_swap:
            detail::validate_column_pair(static_cast<std::size_t>(a.cols()), k, l);
            return Scalar(1) / Scalar(24);
        default:
            throw ValueOutOfRangeError("this operation takes two operands, not column indices");
    }
}

/// Outcome of checking a pipeline against the classical reference. The
/// decoded output is proportional to the reference (every gate is real, so
/// the ratio is a positive real); `rescale_factor` is that ratio as the
/// quotient of Frobenius norms, and `max_abs_diff` the largest entrywise
/// deviation after rescaling.
template <typename Scalar = double>
struct OracleReport {
    ComplexMatrix<Scalar> expected;
    Scalar rescale_factor = Scalar(1);
    Scalar max_abs_diff = Scalar(0);
    Scalar probability_expected = Scalar(0);
    Scalar probability_observed = Scalar(0);
};

template <typename Scalar>
OracleReport<Scalar> compare_with_oracle(ComplexMatrix<Scalar> expected,
                                         const ComplexMatrix<Scalar>& decoded,
                                         Scalar probability_expected,
                                         Scalar probability_observed) {
    if (expected.rows() != decoded.rows() || expected.cols() != decoded.cols())
        throw DimensionMismatchError("oracle and pipeline outputs have different shapes");
    const Scalar dn = decoded.norm();
    if (dn == Scalar(0)) throw ZeroMatrixError("pipeline output is the zero matrix");
    OracleReport<Scalar> report;
    report.rescale_factor = expected.norm() / dn;
    report.max_abs_diff = (decoded * report.rescale_factor - expected).cwiseAbs().maxCoeff();
    report.probability_expected = probability_expected;
    report.probability_observed = probability_observed;
    report.expected = std::move(expected);
    return report;
}

}  // namespace qmatops
