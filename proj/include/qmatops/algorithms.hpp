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
 * The four matrix-operation pipelines: entrywise (Hadamard) product,
 * Kronecker product, column addition, and column swap.
 *
 * Each pipeline encodes its operands, runs a fixed gate sequence, reads the
 * result off a flag qubit by post-selection, and returns the surviving
 * state with the work registers stripped. Inputs are Frobenius-normalized
 * by the encoding, so the returned matrix is the operation applied to the
 * normalized operands; the `scale` field carries its Frobenius norm.
 * `success_probability` is the exact probability of the kept measurement
 * outcome, and `stats` the accumulated circuit cost.
 *
 * Stage labels Phi0, Phi1, ... number the checkpoints of each pipeline in
 * order: Phi0 is the prepared product state, then one label per gate block,
 * with the final label recording the post-measurement state.
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmatops/core.hpp"
#include "qmatops/encoding.hpp"
#include "qmatops/gates.hpp"
#include "qmatops/qstate.hpp"
#include "qmatops/register_layout.hpp"

namespace qmatops {

/// Whether the right Kronecker factor's row count must match the left
/// factor's column count (the published construction: one SWAP layer) or
/// may be arbitrary (an extension that reorders registers as a pure index
/// relabeling, costing no gates).
enum class KroneckerShape { coupled, general };

/// Snapshot taken after a pipeline stage: state norm plus the probability
/// mass sitting on the stage's flag value, when the stage set one.
template <typename Scalar = double>
struct StageRecord {
    std::string stage;
    Scalar norm = Scalar(0);
    std::map<std::string, Scalar> flag_mass;
};

template <typename Scalar = double>
struct AlgorithmResult {
    EncodedMatrix<Scalar> output;
    Scalar success_probability = Scalar(0);
    GateStats stats;
    std::vector<StageRecord<Scalar>> trace;
};

/// The norm of the exact result on normalized operands. It fixes the
/// success probability, and each operation bounds it: at most 1 for the
/// entrywise product, at most sqrt(3) for column addition.
template <typename Scalar = double>
struct NormalizationG {
    Scalar value = Scalar(0);
    Scalar upper_bound = Scalar(1);
};

template <typename Scalar>
NormalizationG<Scalar> hadamard_normalization(const ComplexMatrix<Scalar>& a,
                                              const ComplexMatrix<Scalar>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatchError("entrywise product requires equal shapes");
    const Scalar na = a.norm();
    const Scalar nb = b.norm();
    if (na == Scalar(0) || nb == Scalar(0)) throw ZeroMatrixError("operands must be nonzero");
    return NormalizationG<Scalar>{(a / na).cwiseProduct(b / nb).norm(), Scalar(1)};
}

template <typename Scalar>
NormalizationG<Scalar> column_add_normalization(const ComplexMatrix<Scalar>& a, BasisValue k,
                                                BasisValue l) {
    detail::validate_column_pair(static_cast<std::size_t>(a.cols()), k, l);
    const Scalar na = a.norm();
    if (na == Scalar(0)) throw ZeroMatrixError("operand must be nonzero");
    ComplexMatrix<Scalar> added = a / na;
    added.col(static_cast<Eigen::Index>(l)) += added.col(static_cast<Eigen::Index>(k));
    return NormalizationG<Scalar>{added.norm(), std::sqrt(Scalar(3))};
}

namespace detail {

/// Confirms the given registers hold exactly the expected basis values
/// (up to kNormTolerance of stray mass) and measures them away, leaving
/// the renormalized remainder.
template <typename Scalar>
void strip_residual(QState<Scalar>& state,
                    const std::vector<std::pair<std::string, BasisValue>>& expected) {
    const RegisterLayout& layout = state.layout();
    BasisValue mask = 0;
    BasisValue want = 0;
    for (const auto& [name, value] : expected) {
        mask |= layout.mask(name);
        want |= value << layout.shift(name);
    }
    Scalar matching = Scalar(0);
    for (std::size_t i = 0; i < state.dimension(); ++i)
        if ((static_cast<BasisValue>(i) & mask) == want)
            matching += std::norm(state.amplitudes()[static_cast<Eigen::Index>(i)]);
    if (Scalar(1) - matching > kNormTolerance<Scalar>)
        throw ResidualEntanglementError(
            "work registers hold " + std::to_string(static_cast<double>(Scalar(1) - matching)) +
            " probability mass away from their expected values");
    for (const auto& [name, value] : expected)
        state = std::move(postselect(state, name, value).state);
}

/// Appends stage records to a sink when tracing is on; no-op otherwise.
template <typename Scalar>
class StageTracer {
  public:
    explicit StageTracer(std::vector<StageRecord<Scalar>>* sink) : sink_(sink) {}

    void stage(const QState<Scalar>& state, std::string name) {
        if (sink_) sink_->push_back(StageRecord<Scalar>{std::move(name), state.norm(), {}});
    }

    void stage(const QState<Scalar>& state, std::string name,
               const std::vector<std::pair<std::string, BasisValue>>& flags) {
        if (!sink_) return;
        std::map<std::string, Scalar> masses;
        for (const auto& [reg, value] : flags)
            masses[reg + "=" + std::to_string(value)] = basis_mass(state, reg, value);
        sink_->push_back(StageRecord<Scalar>{std::move(name), state.norm(), std::move(masses)});
    }

  private:
    std::vector<StageRecord<Scalar>>* sink_;
};

}  // namespace detail

/// Entrywise (Hadamard) product of two equally shaped matrices.
///
/// Both operands are encoded side by side; per-qubit comparators mark the
/// diagonal where both row and both column registers agree, Hadamards on
/// the second copy's registers concentrate the diagonal onto their zero
/// value, and a final flag marks the fully matched branch, which is kept.
/// The success probability is G^2 / 2^(n+m) with G the normalization of
/// the entrywise product.
template <typename Scalar>
AlgorithmResult<Scalar> hadamard_product(const ComplexMatrix<Scalar>& a,
                                         const ComplexMatrix<Scalar>& b,
                                         bool record_trace = false) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatchError("entrywise product requires equal shapes; got " +
                                     std::to_string(a.rows()) + " x " + std::to_string(a.cols()) +
                                     " and " + std::to_string(b.rows()) + " x " +
                                     std::to_string(b.cols()));
    EncodedMatrix<Scalar> ea = encode_matrix(a, "R1", "C1");
    EncodedMatrix<Scalar> eb = encode_matrix(b, "R2", "C2");
    const std::size_t n = ea.state.layout().width("R1");
    const std::size_t m = ea.state.layout().width("C1");
    const BasisValue rows_mark = (BasisValue{1} << n) - 1;
    const BasisValue cols_mark = (BasisValue{1} << m) - 1;

    AlgorithmResult<Scalar> result;
    detail::StageTracer<Scalar> tracer(record_trace ? &result.trace : nullptr);
    GateStats* stats = &result.stats;

    QState<Scalar> state = tensor(ea.state, eb.state);
    state = append_ancilla(state, "B1", n, 0);
    state = append_ancilla(state, "B2", m, 0);
    state = append_ancilla(state, "B3", 1, 0);
    state = append_ancilla(state, "B4", 1, 0);
    tracer.stage(state, "Phi0");

    compare_registers_mark(state, "R1", "R2", "B1", stats);
    tracer.stage(state, "Phi1", {{"B1", rows_mark}});

    compare_registers_mark(state, "C1", "C2", "B2", stats);
    tracer.stage(state, "Phi2", {{"B2", cols_mark}});

    pattern_flag(state, {{"B1", rows_mark}, {"B2", cols_mark}}, "B3", stats);
    tracer.stage(state, "Phi3", {{"B3", 1}});

    hadamard_on_registers(state, {"R2", "C2"}, stats);
    tracer.stage(state, "Phi4");

    pattern_flag(state,
                 {{"R2", 0}, {"C2", 0}, {"B1", rows_mark}, {"B2", cols_mark}, {"B3", 1}}, "B4",
                 stats);
    tracer.stage(state, "Phi5", {{"B4", 1}});

    PostSelection<Scalar> kept = postselect(state, "B4", 1);
    result.success_probability = kept.probability;
    state = std::move(kept.state);
    tracer.stage(state, "Phi6");

    detail::strip_residual(
        state, {{"R2", 0}, {"C2", 0}, {"B1", rows_mark}, {"B2", cols_mark}, {"B3", 1}});

    const Scalar g =
        std::sqrt(result.success_probability * Scalar(std::size_t{1} << (n + m)));
    result.output = EncodedMatrix<Scalar>{std::move(state), "R1", "C1", g};
    return result;
}

/// Kronecker product. No measurement is involved. In the coupled shape the
/// left factor's column register and the right factor's row register have
/// equal width, so one layer of SWAPs exchanges their values and the row
/// pair and column pair can be merged in place by relabeling. The general
/// shape instead reorders the registers outright — a pure index relabeling
/// with no gate cost, beyond the published construction. Succeeds with
/// probability 1 either way.
template <typename Scalar>
AlgorithmResult<Scalar> kronecker_product(const ComplexMatrix<Scalar>& a,
                                          const ComplexMatrix<Scalar>& b,
                                          KroneckerShape shape = KroneckerShape::coupled,
                                          bool record_trace = false) {
    if (shape == KroneckerShape::coupled && b.rows() != a.cols())
        throw DimensionMismatchError(
            "coupled Kronecker product requires the right factor's row count to equal the left "
            "factor's column count; use the general shape to lift this");
    EncodedMatrix<Scalar> ea = encode_matrix(a, "R1", "C1");
    EncodedMatrix<Scalar> eb = encode_matrix(b, "R2", "C2");

    AlgorithmResult<Scalar> result;
    detail::StageTracer<Scalar> tracer(record_trace ? &result.trace : nullptr);

    QState<Scalar> state = tensor(ea.state, eb.state);
    tracer.stage(state, "Phi0");

    if (shape == KroneckerShape::coupled) {
        swap_registers(state, "C1", "R2", &result.stats);
        state = merge_adjacent(state, "R1", "C1", "R");
        state = merge_adjacent(state, "R2", "C2", "C");
    } else {
        state = permute_registers(state, {"R1", "R2", "C1", "C2"});
        state = merge_adjacent(state, "R1", "R2", "R");
        state = merge_adjacent(state, "C1", "C2", "C");
    }
    tracer.stage(state, "Phi1");

    result.success_probability = Scalar(1);
    result.output = EncodedMatrix<Scalar>{std::move(state), "R", "C", Scalar(1)};
    return result;
}

/// Adds column k into column l (column l becomes their sum; column k and
/// all others are untouched).
///
/// A work column register prepared in (|k> + |l>)/sqrt(2) routes the two
/// contributions: one flag spots the |k> work branch, a second spots data
/// column k on the |l> work branch, a controlled swap reroutes that data
/// into column l's slot, and Hadamards on the two flags interfere the
/// contributions so the kept branch holds the sum. The success probability
/// is G^2 / 8.
template <typename Scalar>
AlgorithmResult<Scalar> column_addition(const ComplexMatrix<Scalar>& a, BasisValue k, BasisValue l,
                                        bool record_trace = false) {
    detail::validate_column_pair(static_cast<std::size_t>(a.cols()), k, l);
    EncodedMatrix<Scalar> ea = encode_matrix(a, "R1", "C1");
    const std::size_t m = ea.state.layout().width("C1");

    AlgorithmResult<Scalar> result;
    detail::StageTracer<Scalar> tracer(record_trace ? &result.trace : nullptr);
    GateStats* stats = &result.stats;

    using Complex = typename QState<Scalar>::Complex;
    QState<Scalar> work = QState<Scalar>::superposition(RegisterLayout({Register{"C2", m}}),
                                                        {{k, Complex(1)}, {l, Complex(1)}});
    QState<Scalar> state = tensor(ea.state, work);
    state = append_ancilla(state, "B1", 1, 0);
    state = append_ancilla(state, "B2", 1, 0);
    state = append_ancilla(state, "B3", 1, 0);
    state = append_ancilla(state, "B4", 1, 0);
    tracer.stage(state, "Phi0");

    pattern_flag(state, {{"C2", k}}, "B1", stats);
    tracer.stage(state, "Phi1", {{"B1", 1}});

    pattern_flag(state, {{"C1", k}, {"B1", 0}}, "B2", stats);
    tracer.stage(state, "Phi2", {{"B2", 1}});

    controlled_swap_registers(state, "C1", "C2", "B2", stats);
    tracer.stage(state, "Phi3");

    pattern_flag(state, {{"B1", 0}, {"B2", 0}}, "B3", stats);
    tracer.stage(state, "Phi4", {{"B3", 1}});

    hadamard_on_registers(state, {"B1", "B2"}, stats);
    tracer.stage(state, "Phi5");

    pattern_flag(state, {{"B1", 0}, {"B2", 0}, {"B3", 0}}, "B4", stats);
    tracer.stage(state, "Phi6", {{"B4", 1}});

    PostSelection<Scalar> kept = postselect(state, "B4", 1);
    result.success_probability = kept.probability;
    state = std::move(kept.state);
    tracer.stage(state, "Phi7");

    detail::strip_residual(state, {{"C2", k}, {"B1", 0}, {"B2", 0}, {"B3", 0}});

    result.output = EncodedMatrix<Scalar>{std::move(state), "R1", "C1",
                                          std::sqrt(Scalar(8) * result.success_probability)};
    return result;
}

/// Exchanges columns k and l.
///
/// The work pair (R2, C2) is prepared in (|l>|k> + |k>|k> + |l>|l>)/sqrt(3).
/// The |l>|k> branch carries every column except k and l unchanged; the
/// |k>|k> branch donates its data at column l via a controlled swap against
/// R2, and the |l>|l> branch donates column k via a controlled swap against
/// C2, both landing on the common residual |l>|k>. Flagging the three
/// useful branch patterns and interfering the flags leaves the swapped
/// matrix with success probability exactly 1/24, independent of the input.
template <typename Scalar>
AlgorithmResult<Scalar> column_swap(const ComplexMatrix<Scalar>& a, BasisValue k, BasisValue l,
                                    bool record_trace = false) {
    detail::validate_column_pair(static_cast<std::size_t>(a.cols()), k, l);
    EncodedMatrix<Scalar> ea = encode_matrix(a, "R1", "C1");
    const std::size_t m = ea.state.layout().width("C1");

    AlgorithmResult<Scalar> result;
    detail::StageTracer<Scalar> tracer(record_trace ? &result.trace : nullptr);
    GateStats* stats = &result.stats;

    using Complex = typename QState<Scalar>::Complex;
    RegisterLayout work_layout({Register{"R2", m}, Register{"C2", m}});
    QState<Scalar> work = QState<Scalar>::superposition(
        work_layout, {{(l << m) | k, Complex(1)}, {(k << m) | k, Complex(1)},
                      {(l << m) | l, Complex(1)}});
    QState<Scalar> state = tensor(ea.state, work);
    state = append_ancilla(state, "B1", 1, 0);
    state = append_ancilla(state, "B2a", 1, 0);
    state = append_ancilla(state, "B2b", 1, 0);
    state = append_ancilla(state, "B3", 1, 0);
    state = append_ancilla(state, "B4", 1, 0);
    tracer.stage(state, "Phi0");

    pattern_flag(state, {{"R2", l}, {"C2", k}}, "B1", stats);
    tracer.stage(state, "Phi1", {{"B1", 1}});

    pattern_flag(state, {{"C1", k}, {"R2", l}}, "B2a", stats);
    pattern_flag(state, {{"C1", l}, {"C2", k}}, "B2b", stats);
    tracer.stage(state, "Phi2", {{"B2a", 1}, {"B2b", 1}});

    controlled_swap_registers(state, "C1", "C2", "B2a", stats);
    controlled_swap_registers(state, "C1", "R2", "B2b", stats);
    tracer.stage(state, "Phi3");

    pattern_flag(state, {{"B1", 1}, {"B2a", 0}, {"B2b", 0}}, "B3", stats);
    pattern_flag(state, {{"B1", 0}, {"B2a", 0}, {"B2b", 1}}, "B3", stats);
    pattern_flag(state, {{"B1", 0}, {"B2a", 1}, {"B2b", 0}}, "B3", stats);
    tracer.stage(state, "Phi4", {{"B3", 1}});

    hadamard_on_registers(state, {"B1", "B2a", "B2b"}, stats);
    tracer.stage(state, "Phi5");

    pattern_flag(state, {{"B1", 0}, {"B2a", 0}, {"B2b", 0}, {"B3", 1}}, "B4", stats);
    tracer.stage(state, "Phi6", {{"B4", 1}});

    PostSelection<Scalar> kept = postselect(state, "B4", 1);
    result.success_probability = kept.probability;
    state = std::move(kept.state);
    tracer.stage(state, "Phi7");

    detail::strip_residual(state,
                           {{"R2", l}, {"C2", k}, {"B1", 0}, {"B2a", 0}, {"B2b", 0}, {"B3", 1}});

    result.output = EncodedMatrix<Scalar>{std::move(state), "R1", "C1", Scalar(1)};
    return result;
}

}  // namespace qmatops
