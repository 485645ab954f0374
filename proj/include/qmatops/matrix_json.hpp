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
 * JSON serialization for matrices, gate statistics, stage traces, and
 * oracle reports.
 *
 * Matrix files look like
 *
 *     {"rows": 2, "cols": 2, "entries": [[1, 0], [0, -1], 0.5, 2]}
 *
 * with entries row-major; an entry is either a [re, im] pair or a bare
 * number standing for [x, 0]. Parse errors name the offending field.
 */

#pragma once

#include <json.hpp>

#include <cstddef>
#include <fstream>
#include <string>
#include <vector>

#include "qmatops/algorithms.hpp"
#include "qmatops/core.hpp"
#include "qmatops/encoding.hpp"
#include "qmatops/gates.hpp"
#include "qmatops/oracle.hpp"

namespace qmatops {

using Json = nlohmann::json;

namespace detail {

/// Dimensions far beyond the simulable range are rejected up front so a
/// typo cannot ask for a gigantic allocation.
inline constexpr std::size_t kMaxJsonDimension = std::size_t{1} << 24;

inline std::size_t require_dimension(const Json& j, const std::string& field) {
    if (!j.contains(field) || !j[field].is_number_integer() || j[field].template get<long long>() < 1)
        throw JsonFormatError("'" + field + "' must be a positive integer");
    const auto value = j[field].template get<long long>();
    if (static_cast<std::size_t>(value) > kMaxJsonDimension)
        throw JsonFormatError("'" + field + "' exceeds the supported range");
    return static_cast<std::size_t>(value);
}

}  // namespace detail

template <typename Scalar = double>
ComplexMatrix<Scalar> matrix_from_json(const Json& j) {
    if (!j.is_object()) throw JsonFormatError("matrix must be a JSON object");
    const std::size_t rows = detail::require_dimension(j, "rows");
    const std::size_t cols = detail::require_dimension(j, "cols");
    if (!j.contains("entries") || !j["entries"].is_array())
        throw JsonFormatError("'entries' must be an array");
    const Json& entries = j["entries"];
    if (entries.size() != rows * cols)
        throw JsonFormatError("'entries' must hold rows*cols = " + std::to_string(rows * cols) +
                              " values; got " + std::to_string(entries.size()));

    ComplexMatrix<Scalar> out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const Json& e = entries[i];
        Scalar re = Scalar(0);
        Scalar im = Scalar(0);
        if (e.is_number()) {
            re = e.template get<Scalar>();
        } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
            re = e[0].template get<Scalar>();
            im = e[1].template get<Scalar>();
        } else {
            throw JsonFormatError("entries[" + std::to_string(i) +
                                  "] must be a number or a [re, im] pair");
        }
        out(static_cast<Eigen::Index>(i / cols), static_cast<Eigen::Index>(i % cols)) =
            std::complex<Scalar>(re, im);
    }
    return out;
}

template <typename Scalar = double>
ComplexMatrix<Scalar> load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw JsonFormatError("cannot open matrix file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw JsonFormatError("invalid JSON in '" + path + "': " + e.what());
    }
    try {
        return matrix_from_json<Scalar>(j);
    } catch (const JsonFormatError& e) {
        throw JsonFormatError(std::string(e.what()) + " in '" + path + "'");
    }
}

template <typename Scalar>
Json matrix_to_json(const ComplexMatrix<Scalar>& a) {
    Json entries = Json::array();
    for (Eigen::Index s = 0; s < a.rows(); ++s)
        for (Eigen::Index t = 0; t < a.cols(); ++t)
            entries.push_back(Json::array({a(s, t).real(), a(s, t).imag()}));
    return Json{{"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(entries)}};
}

inline Json gate_stats_to_json(const GateStats& stats) {
    return Json{{"pattern_controlled_x_count", stats.pattern_controlled_x_count},
                {"total_control_qubits", stats.total_control_qubits},
                {"cswap_count", stats.cswap_count},
                {"swap_count", stats.swap_count},
                {"hadamard_count", stats.hadamard_count},
                {"depth_layers", stats.depth_layers}};
}

template <typename Scalar>
Json trace_to_json(const std::vector<StageRecord<Scalar>>& trace) {
    Json out = Json::array();
    for (const StageRecord<Scalar>& record : trace)
        out.push_back(Json{{"stage", record.stage},
                           {"norm", record.norm},
                           {"flag_mass", record.flag_mass}});
    return out;
}

template <typename Scalar>
Json oracle_report_to_json(const OracleReport<Scalar>& report) {
    return Json{{"expected", matrix_to_json(report.expected)},
                {"rescale_factor", report.rescale_factor},
                {"max_abs_diff", report.max_abs_diff},
                {"probability_expected", report.probability_expected},
                {"probability_observed", report.probability_observed}};
}

}  // namespace qmatops
