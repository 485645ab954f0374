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
 * Register-level gate primitives. Everything here is built from one kernel,
 * the pattern-controlled X: flip a target qubit on those basis states whose
 * control bits match a fixed pattern. Costs are tracked in GateStats; the
 * control-qubit total is the standard proxy for Toffoli-decomposition cost.
 *
 * Depth is counted in layers: gates applied in one call that act on
 * disjoint qubits share a layer.
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmatops/core.hpp"
#include "qmatops/qstate.hpp"
#include "qmatops/register_layout.hpp"

namespace qmatops {

/// Circuit-cost counters accumulated by the gate primitives.
struct GateStats {
    std::size_t pattern_controlled_x_count = 0;
    std::size_t total_control_qubits = 0;
    std::size_t cswap_count = 0;
    std::size_t swap_count = 0;
    std::size_t hadamard_count = 0;
    std::size_t depth_layers = 0;

    GateStats& operator+=(const GateStats& other) {
        pattern_controlled_x_count += other.pattern_controlled_x_count;
        total_control_qubits += other.total_control_qubits;
        cswap_count += other.cswap_count;
        swap_count += other.swap_count;
        hadamard_count += other.hadamard_count;
        depth_layers += other.depth_layers;
        return *this;
    }

    bool operator==(const GateStats& other) const {
        return pattern_controlled_x_count == other.pattern_controlled_x_count &&
               total_control_qubits == other.total_control_qubits &&
               cswap_count == other.cswap_count && swap_count == other.swap_count &&
               hadamard_count == other.hadamard_count && depth_layers == other.depth_layers;
    }

    bool operator!=(const GateStats& other) const { return !(*this == other); }
};

/// Requires a whole register to hold a specific basis value.
struct ControlCondition {
    std::string register_name;
    BasisValue value = 0;
};

namespace detail {

/// Flips the target bit on every basis state whose control bits equal
/// `control_value`. `target_mask` must be a single bit outside the controls.
template <typename Scalar>
void apply_pattern_x(typename QState<Scalar>::Vector& amps, BasisValue control_mask,
                     BasisValue control_value, BasisValue target_mask) {
    const std::size_t dim = static_cast<std::size_t>(amps.size());
    for (std::size_t i = 0; i < dim; ++i) {
        const BasisValue x = static_cast<BasisValue>(i);
        if ((x & control_mask) == control_value && (x & target_mask) == 0)
            std::swap(amps[static_cast<Eigen::Index>(i)],
                      amps[static_cast<Eigen::Index>(i | target_mask)]);
    }
}

inline void require_distinct(const std::vector<std::string_view>& names) {
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw OverlappingSupportError("register '" + std::string(names[i]) +
                                              "' used twice in one gate");
}

}  // namespace detail

/// XNOR-marks two equal-width registers into an ancilla of the same width:
/// ancilla qubit j flips when qubit j of both inputs is 0 and again when
/// both are 1, so after the gate ancilla bit j is (a_j == b_j) for an
/// ancilla prepared in |0>. The ancilla ends in the all-ones value exactly
/// on the subspace where the registers agree.
///
/// Cost: 2w pattern-controlled X gates of 2 controls each, two layers.
template <typename Scalar>
void compare_registers_mark(QState<Scalar>& state, std::string_view reg_a, std::string_view reg_b,
                            std::string_view ancilla, GateStats* stats = nullptr) {
    const RegisterLayout& layout = state.layout();
    detail::require_distinct({reg_a, reg_b, ancilla});
    const std::size_t w = layout.width(reg_a);
    if (layout.width(reg_b) != w || layout.width(ancilla) != w)
        throw WidthMismatchError("compare requires registers of equal width");

    for (std::size_t j = 0; j < w; ++j) {
        const BasisValue bit_a = layout.bit_mask(reg_a, j);
        const BasisValue bit_b = layout.bit_mask(reg_b, j);
        const BasisValue bit_anc = layout.bit_mask(ancilla, j);
        const BasisValue controls = bit_a | bit_b;
        detail::apply_pattern_x<Scalar>(state.amplitudes(), controls, 0, bit_anc);
        detail::apply_pattern_x<Scalar>(state.amplitudes(), controls, controls, bit_anc);
    }
    if (stats) {
        stats->pattern_controlled_x_count += 2 * w;
        stats->total_control_qubits += 4 * w;
        stats->depth_layers += 2;
    }
}

/// Flips a one-qubit target register on the subspace where every condition
/// register holds its required value. One pattern-controlled X whose
/// control count is the summed width of the condition registers.
template <typename Scalar>
void pattern_flag(QState<Scalar>& state, const std::vector<ControlCondition>& conditions,
                  std::string_view target, GateStats* stats = nullptr) {
    const RegisterLayout& layout = state.layout();
    if (conditions.empty()) throw ValueOutOfRangeError("flag requires at least one condition");
    if (layout.width(target) != 1)
        throw WidthMismatchError("flag target must be a one-qubit register");

    std::vector<std::string_view> names{target};
    for (const ControlCondition& c : conditions) names.push_back(c.register_name);
    detail::require_distinct(names);

    BasisValue control_mask = 0;
    BasisValue control_value = 0;
    std::size_t control_qubits = 0;
    for (const ControlCondition& c : conditions) {
        const std::size_t w = layout.width(c.register_name);
        const BasisValue limit = BasisValue{1} << w;
        if (c.value >= limit)
            throw ValueOutOfRangeError("condition value " + std::to_string(c.value) +
                                       " does not fit register '" + c.register_name + "'");
        control_mask |= layout.mask(c.register_name);
        control_value |= c.value << layout.shift(c.register_name);
        control_qubits += w;
    }
    detail::apply_pattern_x<Scalar>(state.amplitudes(), control_mask, control_value,
                                    layout.mask(target));
    if (stats) {
        stats->pattern_controlled_x_count += 1;
        stats->total_control_qubits += control_qubits;
        stats->depth_layers += 1;
    }
}

/// Exchanges two equal-width registers on the subspace where a one-qubit
/// control register is |1>. Counts one controlled-SWAP per qubit pair,
/// all in a single layer.
template <typename Scalar>
void controlled_swap_registers(QState<Scalar>& state, std::string_view reg_a,
                               std::string_view reg_b, std::string_view control,
                               GateStats* stats = nullptr) {
    const RegisterLayout& layout = state.layout();
    detail::require_distinct({reg_a, reg_b, control});
    const std::size_t w = layout.width(reg_a);
    if (layout.width(reg_b) != w) throw WidthMismatchError("swap requires equal-width registers");
    if (layout.width(control) != 1)
        throw WidthMismatchError("swap control must be a one-qubit register");

    auto& amps = state.amplitudes();
    const BasisValue control_bit = layout.mask(control);
    const std::size_t shift_a = layout.shift(reg_a);
    const std::size_t shift_b = layout.shift(reg_b);
    const BasisValue mask_a = layout.mask(reg_a);
    const BasisValue mask_b = layout.mask(reg_b);
    const std::size_t dim = state.dimension();
    for (std::size_t i = 0; i < dim; ++i) {
        const BasisValue x = static_cast<BasisValue>(i);
        if ((x & control_bit) == 0) continue;
        const BasisValue va = (x & mask_a) >> shift_a;
        const BasisValue vb = (x & mask_b) >> shift_b;
        if (va >= vb) continue;  // visit each pair once
        const BasisValue y = (x & ~(mask_a | mask_b)) | (vb << shift_a) | (va << shift_b);
        std::swap(amps[static_cast<Eigen::Index>(x)], amps[static_cast<Eigen::Index>(y)]);
    }
    if (stats) {
        stats->cswap_count += w;
        stats->depth_layers += 1;
    }
}

/// Unconditionally exchanges two equal-width registers: one SWAP per qubit
/// pair, one layer.
template <typename Scalar>
void swap_registers(QState<Scalar>& state, std::string_view reg_a, std::string_view reg_b,
                    GateStats* stats = nullptr) {
    const RegisterLayout& layout = state.layout();
    detail::require_distinct({reg_a, reg_b});
    const std::size_t w = layout.width(reg_a);
    if (layout.width(reg_b) != w) throw WidthMismatchError("swap requires equal-width registers");

    auto& amps = state.amplitudes();
    const std::size_t shift_a = layout.shift(reg_a);
    const std::size_t shift_b = layout.shift(reg_b);
    const BasisValue mask_a = layout.mask(reg_a);
    const BasisValue mask_b = layout.mask(reg_b);
    const std::size_t dim = state.dimension();
    for (std::size_t i = 0; i < dim; ++i) {
        const BasisValue x = static_cast<BasisValue>(i);
        const BasisValue va = (x & mask_a) >> shift_a;
        const BasisValue vb = (x & mask_b) >> shift_b;
        if (va >= vb) continue;
        const BasisValue y = (x & ~(mask_a | mask_b)) | (vb << shift_a) | (va << shift_b);
        std::swap(amps[static_cast<Eigen::Index>(x)], amps[static_cast<Eigen::Index>(y)]);
    }
    if (stats) {
        stats->swap_count += w;
        stats->depth_layers += 1;
    }
}

/// Applies a Hadamard to every qubit of the named registers; all act on
/// disjoint qubits, so the whole call is one layer.
template <typename Scalar>
void hadamard_on_registers(QState<Scalar>& state, const std::vector<std::string>& registers,
                           GateStats* stats = nullptr) {
    if (registers.empty()) return;
    const RegisterLayout& layout = state.layout();
    {
        std::vector<std::string_view> names(registers.begin(), registers.end());
        detail::require_distinct(names);
    }
    auto& amps = state.amplitudes();
    const Scalar inv_sqrt2 = Scalar(1) / std::sqrt(Scalar(2));
    const std::size_t dim = state.dimension();
    std::size_t qubits = 0;
    for (const std::string& name : registers) {
        const std::size_t w = layout.width(name);
        qubits += w;
        for (std::size_t j = 0; j < w; ++j) {
            const BasisValue bit = layout.bit_mask(name, j);
            for (std::size_t i = 0; i < dim; ++i) {
                const BasisValue x = static_cast<BasisValue>(i);
                if (x & bit) continue;
                auto& a0 = amps[static_cast<Eigen::Index>(x)];
                auto& a1 = amps[static_cast<Eigen::Index>(x | bit)];
                const std::complex<Scalar> lo = (a0 + a1) * inv_sqrt2;
                const std::complex<Scalar> hi = (a0 - a1) * inv_sqrt2;
                a0 = lo;
                a1 = hi;
            }
        }
    }
    if (stats) {
        stats->hadamard_count += qubits;
        stats->depth_layers += 1;
    }
}

/// Result of a projective measurement kept on one outcome.
template <typename Scalar = double>
struct PostSelection {
    QState<Scalar> state;
    Scalar probability = Scalar(0);
};

/// Measures the named register, keeps the branch where it reads `value`,
/// and removes the register from the layout. The outcome probability is
/// returned exactly as summed from the state. A branch with probability
/// below kPostSelectionFloor is refused.
template <typename Scalar>
PostSelection<Scalar> postselect(const QState<Scalar>& state, std::string_view reg,
                                 BasisValue value) {
    const RegisterLayout& layout = state.layout();
    const std::size_t w = layout.width(reg);
    const std::size_t shift = layout.shift(reg);
    const BasisValue limit = BasisValue{1} << w;
    if (value >= limit)
        throw ValueOutOfRangeError("outcome " + std::to_string(value) +
                                   " does not fit register '" + std::string(reg) + "'");

    const BasisValue reg_mask = layout.mask(reg);
    const BasisValue want = value << shift;
    Scalar probability = Scalar(0);
    const std::size_t dim = state.dimension();
    for (std::size_t i = 0; i < dim; ++i)
        if ((static_cast<BasisValue>(i) & reg_mask) == want)
            probability += std::norm(state.amplitudes()[static_cast<Eigen::Index>(i)]);

    if (probability < kPostSelectionFloor<Scalar>)
        throw PostSelectionImpossibleError("outcome " + std::to_string(value) + " on register '" +
                                           std::string(reg) + "' has probability " +
                                           std::to_string(static_cast<double>(probability)));

    RegisterLayout reduced = layout.without(reg);
    typename QState<Scalar>::Vector amps(static_cast<Eigen::Index>(reduced.dimension()));
    const Scalar renorm = Scalar(1) / std::sqrt(probability);
    const BasisValue low_mask = (BasisValue{1} << shift) - 1;
    for (std::size_t i = 0; i < dim; ++i) {
        const BasisValue x = static_cast<BasisValue>(i);
        if ((x & reg_mask) != want) continue;
        const BasisValue compact = ((x >> (shift + w)) << shift) | (x & low_mask);
        amps[static_cast<Eigen::Index>(compact)] =
            state.amplitudes()[static_cast<Eigen::Index>(i)] * renorm;
    }
    return PostSelection<Scalar>{QState<Scalar>(std::move(reduced), std::move(amps)), probability};
}

/// Probability of reading `value` on the named register, without measuring.
template <typename Scalar>
Scalar basis_mass(const QState<Scalar>& state, std::string_view reg, BasisValue value) {
    const RegisterLayout& layout = state.layout();
    const BasisValue reg_mask = layout.mask(reg);
    const BasisValue want = value << layout.shift(reg);
    Scalar mass = Scalar(0);
    for (std::size_t i = 0; i < state.dimension(); ++i)
        if ((static_cast<BasisValue>(i) & reg_mask) == want)
            mass += std::norm(state.amplitudes()[static_cast<Eigen::Index>(i)]);
    return mass;
}

}  // namespace qmatops
