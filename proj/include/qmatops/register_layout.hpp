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
 * Named-register bookkeeping over a flat statevector index.
 *
 * Bit convention: the first declared register occupies the most significant
 * bits of the global index, and within a register qubit 0 is the register's
 * most significant bit. With layout [(R, n), (C, m)] the basis state with
 * row value s and column value t sits at global index (s << m) | t, so
 * merging two adjacent registers is a relabeling with no data movement.
 */

#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "qmatops/core.hpp"

namespace qmatops {

/// One named group of qubits.
struct Register {
    std::string name;
    std::size_t width = 0;
};

class RegisterLayout {
  public:
    RegisterLayout() = default;

    explicit RegisterLayout(std::vector<Register> registers) : registers_(std::move(registers)) {
        validate();
    }

    RegisterLayout(std::initializer_list<Register> registers)
        : RegisterLayout(std::vector<Register>(registers)) {}

    const std::vector<Register>& registers() const { return registers_; }

    std::size_t size() const { return registers_.size(); }

    std::size_t total_qubits() const {
        std::size_t total = 0;
        for (const Register& reg : registers_) total += reg.width;
        return total;
    }

    /// Statevector length, 2^total_qubits.
    std::size_t dimension() const { return std::size_t{1} << total_qubits(); }

    bool contains(std::string_view name) const {
        for (const Register& reg : registers_)
            if (reg.name == name) return true;
        return false;
    }

    std::size_t index_of(std::string_view name) const {
        for (std::size_t i = 0; i < registers_.size(); ++i)
            if (registers_[i].name == name) return i;
        throw UnknownRegisterError("unknown register '" + std::string(name) + "'");
    }

    std::size_t width(std::string_view name) const { return registers_[index_of(name)].width; }

    /// Number of bits below this register in the global index.
    std::size_t shift(std::string_view name) const {
        std::size_t position = index_of(name);
        std::size_t below = 0;
        for (std::size_t i = position + 1; i < registers_.size(); ++i)
            below += registers_[i].width;
        return below;
    }

    /// Mask selecting this register's bits in the global index.
    BasisValue mask(std::string_view name) const {
        const std::size_t w = width(name);
        const BasisValue field_mask = (w >= 64) ? ~BasisValue{0} : ((BasisValue{1} << w) - 1);
        return field_mask << shift(name);
    }

    /// Value held by this register within a global basis index.
    BasisValue field(std::string_view name, BasisValue global) const {
        const std::size_t w = width(name);
        const BasisValue field_mask = (w >= 64) ? ~BasisValue{0} : ((BasisValue{1} << w) - 1);
        return (global >> shift(name)) & field_mask;
    }

    /// Single-bit mask for the register's qubit at `qubit` (0 = the
    /// register's most significant bit).
    BasisValue bit_mask(std::string_view name, std::size_t qubit) const {
        const std::size_t w = width(name);
        if (qubit >= w)
            throw ValueOutOfRangeError("qubit index " + std::to_string(qubit) +
                                       " out of range for register '" + std::string(name) +
                                       "' of width " + std::to_string(w));
        return BasisValue{1} << (shift(name) + (w - 1 - qubit));
    }

    /// Global index of the basis state assigning `values[i]` to register i.
    BasisValue pack(const std::vector<BasisValue>& values) const {
        if (values.size() != registers_.size())
            throw LayoutError("pack expects one value per register");
        BasisValue global = 0;
        for (std::size_t i = 0; i < registers_.size(); ++i) {
            const std::size_t w = registers_[i].width;
            const BasisValue limit = BasisValue{1} << w;
            if (values[i] >= limit)
                throw ValueOutOfRangeError("value " + std::to_string(values[i]) +
                                           " does not fit register '" + registers_[i].name +
                                           "' of width " + std::to_string(w));
            global = (global << w) | values[i];
        }
        return global;
    }

    /// Layout with `reg` appended at the least significant end.
    RegisterLayout appended(Register reg) const {
        std::vector<Register> extended = registers_;
        extended.push_back(std::move(reg));
        return RegisterLayout(std::move(extended));
    }

    /// Layout with the named register removed.
    RegisterLayout without(std::string_view name) const {
        const std::size_t position = index_of(name);
        std::vector<Register> reduced = registers_;
        reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(position));
        return RegisterLayout(std::move(reduced));
    }

    /// Concatenation; all register names must stay unique.
    RegisterLayout concatenated(const RegisterLayout& other) const {
        std::vector<Register> joined = registers_;
        joined.insert(joined.end(), other.registers_.begin(), other.registers_.end());
        return RegisterLayout(std::move(joined));
    }

    bool operator==(const RegisterLayout& other) const {
        if (registers_.size() != other.registers_.size()) return false;
        for (std::size_t i = 0; i < registers_.size(); ++i)
            if (registers_[i].name != other.registers_[i].name ||
                registers_[i].width != other.registers_[i].width)
                return false;
        return true;
    }

    bool operator!=(const RegisterLayout& other) const { return !(*this == other); }

  private:
    void validate() const {
        for (std::size_t i = 0; i < registers_.size(); ++i) {
            if (registers_[i].name.empty()) throw LayoutError("register names must be nonempty");
            if (registers_[i].width == 0)
                throw LayoutError("register '" + registers_[i].name + "' must have width >= 1");
            for (std::size_t j = i + 1; j < registers_.size(); ++j)
                if (registers_[i].name == registers_[j].name)
                    throw DuplicateRegisterNameError("duplicate register name '" +
                                                     registers_[i].name + "'");
        }
        if (total_qubits() > max_total_qubits())
            throw QubitCapExceededError("layout needs " + std::to_string(total_qubits()) +
                                        " qubits, cap is " + std::to_string(max_total_qubits()));
    }

    std::vector<Register> registers_;
};

}  // namespace qmatops
