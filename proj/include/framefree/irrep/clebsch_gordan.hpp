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

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "framefree/irrep/half_integer.hpp"

namespace framefree {

namespace detail {

inline double factorial(int k) {
    static const std::array<double, 171> table = [] {
        std::array<double, 171> t{};
        t[0] = 1.0;
        for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] * static_cast<double>(i);
        return t;
    }();
    if (k < 0 || k > 170) throw std::out_of_range("factorial argument out of range: " + std::to_string(k));
    return table[static_cast<std::size_t>(k)];
}

inline void require_spin(HalfInteger j, HalfInteger m, const char* name) {
    if (j.is_negative()) throw std::invalid_argument(std::string("clebsch_gordan: negative ") + name);
    if (!same_parity(j, m) || m.abs() > j) {
        throw std::invalid_argument(std::string("clebsch_gordan: invalid projection for ") + name + " = " + j.str() +
                                    ", m = " + m.str());
    }
}

}  // namespace detail

/// ⟨j1 m1; j2 m2 | j m⟩ in the Condon–Shortley convention, via the Racah
/// closed-form sum. Returns 0 when m ≠ m1 + m2.
inline double clebsch_gordan(HalfInteger j1, HalfInteger m1, HalfInteger j2, HalfInteger m2, HalfInteger j,
                             HalfInteger m) {
    detail::require_spin(j1, m1, "j1");
    detail::require_spin(j2, m2, "j2");
    detail::require_spin(j, m, "j");
    if (!same_parity(j1 + j2, j) || j < (j1 - j2).abs() || j > j1 + j2) {
        throw std::invalid_argument("clebsch_gordan: triangle condition violated for (" + j1.str() + ", " +
                                    j2.str() + ", " + j.str() + ")");
    }
    if (m != m1 + m2) return 0.0;

    const int a = (j1 + j2 - j).as_integer();
    const int b = (j1 - j2 + j).as_integer();
    const int c = (j2 - j1 + j).as_integer();
    const int d = (j1 + j2 + j).as_integer();

    using detail::factorial;
    const double prefactor = std::sqrt(j.irrep_dim() * factorial(a) * factorial(b) * factorial(c) / factorial(d + 1));
    const double weights =
        std::sqrt(factorial(integer_difference(j, -m)) * factorial(integer_difference(j, m)) *
                  factorial(integer_difference(j1, m1)) * factorial(integer_difference(j1, -m1)) *
                  factorial(integer_difference(j2, m2)) * factorial(integer_difference(j2, -m2)));

    const int j1_minus_m1 = integer_difference(j1, m1);
    const int j2_plus_m2 = integer_difference(j2, -m2);
    const int shift1 = (j - j2 + m1).as_integer();
    const int shift2 = (j - j1 - m2).as_integer();

    double sum = 0.0;
    for (int k = 0;; ++k) {
        if (k > a || k > j1_minus_m1 || k > j2_plus_m2) break;
        if (shift1 + k < 0 || shift2 + k < 0) continue;
        const double denom = factorial(k) * factorial(a - k) * factorial(j1_minus_m1 - k) * factorial(j2_plus_m2 - k) *
                             factorial(shift1 + k) * factorial(shift2 + k);
        sum += ((k % 2 == 0) ? 1.0 : -1.0) / denom;
    }
    return prefactor * weights * sum;
}

}  // namespace framefree
