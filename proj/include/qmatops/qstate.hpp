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
 * Pure statevector over a register layout, plus the structural operations
 * that rearrange registers: tensor, ancilla append, permutation, merge.
 */

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmatops/core.hpp"
#include "qmatops/register_layout.hpp"

namespace qmatops {

template <typename Scalar = double>
class QState {
  public:
    using Complex = std::complex<Scalar>;
    using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

    /// The trivial state on zero qubits: one amplitude of value 1.
    QState() : amplitudes_(Vector::Ones(1)) {}

    /// Takes ownership of `amplitudes`; the vector must have length equal to
    /// the layout dimension and unit l2 norm within kNormTolerance.
    QState(RegisterLayout layout, Vector amplitudes)
        : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
        if (static_cast<std::size_t>(amplitudes_.size()) != layout_.dimension())
            throw DimensionMismatchError(
                "amplitude vector length " + std::to_string(amplitudes_.size()) +
                " does not match layout dimension " + std::to_string(layout_.dimension()));
        const Scalar n = amplitudes_.norm();
        if (std::abs(n - Scalar(1)) > kNormTolerance<Scalar>)
            throw ValueOutOfRangeError("state norm " + std::to_string(static_cast<double>(n)) +
                                       " is not 1 within tolerance");
    }

    /// |value> in the given layout.
    static QState basis(RegisterLayout layout, BasisValue value) {
        if (value >= layout.dimension())
            throw ValueOutOfRangeError("basis value " + std::to_string(value) +
                                       " out of range for dimension " +
                                       std::to_string(layout.dimension()));
        Vector amps = Vector::Zero(static_cast<Eigen::Index>(layout.dimension()));
        amps[static_cast<Eigen::Index>(value)] = Complex(1);
        return QState(std::move(layout), std::move(amps));
    }

    /// Normalized superposition of the given (index, amplitude) terms.
    static QState superposition(RegisterLayout layout,
                                const std::vector<std::pair<BasisValue, Complex>>& terms) {
        Vector amps = Vector::Zero(static_cast<Eigen::Index>(layout.dimension()));
        for (const auto& [index, amplitude] : terms) {
            if (index >= layout.dimension())
                throw ValueOutOfRangeError("basis value " + std::to_string(index) +
                                           " out of range for dimension " +
                                           std::to_string(layout.dimension()));
            amps[static_cast<Eigen::Index>(index)] += amplitude;
        }
        const Scalar n = amps.norm();
        if (n == Scalar(0)) throw ValueOutOfRangeError("superposition has zero norm");
        amps /= n;
        return QState(std::move(layout), std::move(amps));
    }

    const RegisterLayout& layout() const { return layout_; }
    const Vector& amplitudes() const { return amplitudes_; }

    /// Mutable access for gate kernels; callers must preserve unit norm.
    Vector& amplitudes() { return amplitudes_; }

    std::size_t dimension() const { return static_cast<std::size_t>(amplitudes_.size()); }

    Scalar norm() const { return amplitudes_.norm(); }

  private:
    RegisterLayout layout_;
    Vector amplitudes_;

    template <typename S>
    friend QState<S> tensor(const QState<S>&, const QState<S>&);
    template <typename S>
    friend QState<S> append_ancilla(const QState<S>&, std::string, std::size_t, BasisValue);
    template <typename S>
    friend QState<S> permute_registers(const QState<S>&, const std::vector<std::string>&);
    template <typename S>
    friend QState<S> merge_adjacent(const QState<S>&, std::string_view, std::string_view,
                                    std::string);
};

/// Tensor product; `a`'s registers take the more significant bits.
template <typename Scalar>
QState<Scalar> tensor(const QState<Scalar>& a, const QState<Scalar>& b) {
    RegisterLayout joined = a.layout().concatenated(b.layout());
    typename QState<Scalar>::Vector amps(static_cast<Eigen::Index>(joined.dimension()));
    const std::size_t db = b.dimension();
    for (std::size_t x = 0; x < a.dimension(); ++x)
        for (std::size_t y = 0; y < db; ++y)
            amps[static_cast<Eigen::Index>(x * db + y)] =
                a.amplitudes()[static_cast<Eigen::Index>(x)] *
                b.amplitudes()[static_cast<Eigen::Index>(y)];
    QState<Scalar> out;
    out.layout_ = std::move(joined);
    out.amplitudes_ = std::move(amps);
    return out;
}

/// Adds a fresh register in basis state |value> at the least significant end.
template <typename Scalar>
QState<Scalar> append_ancilla(const QState<Scalar>& state, std::string name, std::size_t width,
                              BasisValue value) {
    RegisterLayout extended = state.layout().appended(Register{std::move(name), width});
    const BasisValue limit = BasisValue{1} << width;
    if (value >= limit)
        throw ValueOutOfRangeError("ancilla value " + std::to_string(value) +
                                   " does not fit width " + std::to_string(width));
    typename QState<Scalar>::Vector amps =
        QState<Scalar>::Vector::Zero(static_cast<Eigen::Index>(extended.dimension()));
    for (std::size_t x = 0; x < state.dimension(); ++x)
        amps[static_cast<Eigen::Index>((static_cast<BasisValue>(x) << width) | value)] =
            state.amplitudes()[static_cast<Eigen::Index>(x)];
    QState<Scalar> out;
    out.layout_ = std::move(extended);
    out.amplitudes_ = std::move(amps);
    return out;
}

/// Reorders registers to `order` (a permutation of all register names),
/// relocating amplitudes accordingly.
template <typename Scalar>
QState<Scalar> permute_registers(const QState<Scalar>& state, const std::vector<std::string>& order) {
    const RegisterLayout& layout = state.layout();
    if (order.size() != layout.size())
        throw LayoutError("permutation must name every register exactly once");
    std::vector<Register> reordered;
    reordered.reserve(order.size());
    for (const std::string& name : order)
        reordered.push_back(Register{name, layout.width(name)});
    RegisterLayout target(reordered);  // rejects duplicates

    typename QState<Scalar>::Vector amps(static_cast<Eigen::Index>(target.dimension()));
    for (std::size_t x = 0; x < state.dimension(); ++x) {
        BasisValue global = 0;
        for (const std::string& name : order) {
            const std::size_t w = layout.width(name);
            global = (global << w) | layout.field(name, static_cast<BasisValue>(x));
        }
        amps[static_cast<Eigen::Index>(global)] = state.amplitudes()[static_cast<Eigen::Index>(x)];
    }
    QState<Scalar> out;
    out.layout_ = std::move(target);
    out.amplitudes_ = std::move(amps);
    return out;
}

/// Relabels two adjacent registers (`high` immediately above `low`) as one
/// register named `merged`. Purely a layout change; amplitudes are untouched.
template <typename Scalar>
QState<Scalar> merge_adjacent(const QState<Scalar>& state, std::string_view high,
                              std::string_view low, std::string merged) {
    const RegisterLayout& layout = state.layout();
    const std::size_t ih = layout.index_of(high);
    const std::size_t il = layout.index_of(low);
    if (il != ih + 1)
        throw LayoutError("registers '" + std::string(high) + "' and '" + std::string(low) +
                          "' are not adjacent");
    std::vector<Register> regs = layout.registers();
    regs[ih] = Register{std::move(merged), regs[ih].width + regs[il].width};
    regs.erase(regs.begin() + static_cast<std::ptrdiff_t>(il));
    QState<Scalar> out;
    out.layout_ = RegisterLayout(std::move(regs));
    out.amplitudes_ = state.amplitudes();
    return out;
}

}  // namespace qmatops
