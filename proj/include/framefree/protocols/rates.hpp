// Copyright 2026 The framefree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "framefree/irrep/coupling.hpp"
#include "framefree/protocols/encoding.hpp"

namespace framefree {

/// Communication rates per physical qubit without a shared frame.
struct RateRow {
    std::size_t n;
    Count total_irreps;       // number of classical messages
    HalfInteger j_max;        // spin with the largest multiplicity
    Count j_max_multiplicity;
    Count dephasing_dim;      // dimension of the largest total-m sector
    double classical_rate;    // log2(total_irreps) / n
    double quantum_rate;      // log2(j_max_multiplicity) / n
    double dephasing_rate;    // log2(dephasing_dim) / n
    double asymptotic_gap;    // (1 − log2(n) / (2n)) − classical_rate
};

inline RateRow rate_row(std::size_t n) {
    if (n < 1 || n > kMaxCombinatoricQubits) {
        throw std::invalid_argument("rate_row: qubit count " + std::to_string(n) + " outside [1, " +
                                    std::to_string(kMaxCombinatoricQubits) + "]");
    }
    const double nd = static_cast<double>(n);
    RateRow row{};
    row.n = n;
    row.total_irreps = total_irrep_count(n);
    row.j_max = most_populous_spin(n);
    row.j_max_multiplicity = multiplicity(n, row.j_max);
    row.dephasing_dim = binomial(n, n / 2);
    row.classical_rate = std::log2(static_cast<double>(row.total_irreps)) / nd;
    row.quantum_rate = std::log2(static_cast<double>(row.j_max_multiplicity)) / nd;
    row.dephasing_rate = std::log2(static_cast<double>(row.dephasing_dim)) / nd;
    row.asymptotic_gap = (1.0 - std::log2(nd) / (2.0 * nd)) - row.classical_rate;
    return row;
}

/// Rows for n = 1 … n_max.
inline std::vector<RateRow> rate_table(std::size_t n_max) {
    if (n_max < 1 || n_max > kMaxCombinatoricQubits) {
        throw std::invalid_argument("rate_table: n_max " + std::to_string(n_max) + " outside [1, " +
                                    std::to_string(kMaxCombinatoricQubits) + "]");
    }
    std::vector<RateRow> rows;
    rows.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) rows.push_back(rate_row(n));
    return rows;
}

}  // namespace framefree
