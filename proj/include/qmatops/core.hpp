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
 * Shared scalar aliases, numeric tolerances, the simulated-width cap, and
 * the error hierarchy used across the library.
 */

#pragma once

#include <atomic>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qmatops {

/// Basis values and global statevector indices.
using BasisValue = std::uint64_t;

/// Norm bookkeeping tolerance: any state produced by a public constructor
/// or a unitary operation must have an l2 norm within this of 1.
template <typename Scalar>
inline constexpr Scalar kNormTolerance = Scalar(1e-10);

/// Tolerance for end-to-end matrix comparisons (decoded output vs oracle).
template <typename Scalar>
inline constexpr Scalar kEntrywiseTolerance = Scalar(1e-9);

/// Below this post-selection probability, renormalization is refused: the
/// branch is treated as truly empty rather than rounding noise.
template <typename Scalar>
inline constexpr Scalar kPostSelectionFloor = Scalar(1e-12);

/// Default cap on the total simulated width. A 24-qubit state is a
/// 16M-entry amplitude array, the upper end of desk-scale memory.
inline constexpr std::size_t kDefaultMaxTotalQubits = 24;

namespace detail {
inline std::atomic<std::size_t>& qubit_cap_storage() {
    static std::atomic<std::size_t> cap{kDefaultMaxTotalQubits};
    return cap;
}
}  // namespace detail

inline std::size_t max_total_qubits() { return detail::qubit_cap_storage().load(); }
inline void set_max_total_qubits(std::size_t qubits) { detail::qubit_cap_storage().store(qubits); }

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ZeroMatrixError final : public Error {
  public:
    using Error::Error;
};

class NonPowerOfTwoError final : public Error {
  public:
    using Error::Error;
};

class DimensionMismatchError final : public Error {
  public:
    using Error::Error;
};

class DuplicateRegisterNameError final : public Error {
  public:
    using Error::Error;
};

class UnknownRegisterError final : public Error {
  public:
    using Error::Error;
};

class WidthMismatchError final : public Error {
  public:
    using Error::Error;
};

class OverlappingSupportError final : public Error {
  public:
    using Error::Error;
};

class ValueOutOfRangeError final : public Error {
  public:
    using Error::Error;
};

class ColumnIndexOutOfRangeError final : public Error {
  public:
    using Error::Error;
};

class EqualColumnsError final : public Error {
  public:
    using Error::Error;
};

class ResidualEntanglementError final : public Error {
  public:
    using Error::Error;
};

/// Layout-shape violations (non-adjacent merge, bad permutation, ...).
class LayoutError final : public Error {
  public:
    using Error::Error;
};

class PostSelectionImpossibleError final : public Error {
  public:
    using Error::Error;
};

class QubitCapExceededError final : public Error {
  public:
    using Error::Error;
};

/// Malformed input files; the message names the offending field.
class JsonFormatError final : public Error {
  public:
    using Error::Error;
};

/// The four matrix operations offered by the pipelines.
enum class Algorithm { hadamard, kronecker, column_add, column_swap };

inline const char* algorithm_name(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::hadamard: return "hadamard";
        case Algorithm::kronecker: return "kron";
        case Algorithm::column_add: return "col-add";
        case Algorithm::column_swap: return "col-swap";
    }
    return "unknown";
}

}  // namespace qmatops
