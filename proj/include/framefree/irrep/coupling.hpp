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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "framefree/irrep/half_integer.hpp"

namespace framefree {

using Count = std::uint64_t;

/// Largest qubit count accepted by the exact combinatorics.
inline constexpr std::size_t kMaxCombinatoricQubits = 64;

/// Sequence of running total spins j_1 = ½, j_2, …, j_N produced by coupling
/// qubits 1, 2, …, N left to right. Labels one copy of the final irrep.
class CouplingPath {
public:
    explicit CouplingPath(std::vector<HalfInteger> values) : values_(std::move(values)) {
        if (values_.empty()) throw std::invalid_argument("CouplingPath: empty path");
        if (values_.front() != HalfInteger::half()) throw std::invalid_argument("CouplingPath: must start at 1/2");
        for (std::size_t k = 1; k < values_.size(); ++k) {
            const int step = values_[k].twice() - values_[k - 1].twice();
            if (step != 1 && step != -1) throw std::invalid_argument("CouplingPath: steps must be +-1/2");
            if (values_[k].is_negative()) throw std::invalid_argument("CouplingPath: negative total spin");
        }
    }

    std::size_t size() const { return values_.size(); }
    HalfInteger operator[](std::size_t k) const { return values_.at(k); }
    HalfInteger final_spin() const { return values_.back(); }
    const std::vector<HalfInteger>& values() const { return values_; }

    /// Step order with +½ before −½, i.e. the larger value wins at the first
    /// difference.
    bool precedes(const CouplingPath& other) const {
        for (std::size_t k = 0; k < std::min(size(), other.size()); ++k) {
            if (values_[k] != other.values_[k]) return values_[k] > other.values_[k];
        }
        return size() < other.size();
    }

    bool operator==(const CouplingPath&) const = default;

    std::string str() const {
        std::string s = "[";
        for (std::size_t k = 0; k < values_.size(); ++k) s += (k ? "," : "") + values_[k].str();
        return s + "]";
    }

private:
    std::vector<HalfInteger> values_;
};

namespace detail {

inline void require_qubits(std::size_t n, const char* what) {
    if (n < 1 || n > kMaxCombinatoricQubits) {
        throw std::invalid_argument(std::string(what) + ": qubit count " + std::to_string(n) + " outside [1, " +
                                    std::to_string(kMaxCombinatoricQubits) + "]");
    }
}

inline void require_valid_spin(std::size_t n, HalfInteger j, const char* what) {
    require_qubits(n, what);
    if (j.is_negative() || j.twice() > static_cast<int>(n) || (static_cast<int>(n) - j.twice()) % 2 != 0) {
        throw std::invalid_argument(std::string(what) + ": j = " + j.str() + " is not a valid total spin for " +
                                    std::to_string(n) + " qubits");
    }
}

inline unsigned __int128 binomial128(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace detail

/// Exact binomial coefficient for n ≤ 64.
inline Count binomial(std::size_t n, std::size_t k) {
    if (n > kMaxCombinatoricQubits) throw std::invalid_argument("binomial: n too large");
    return static_cast<Count>(detail::binomial128(static_cast<unsigned>(n), static_cast<unsigned>(k)));
}

/// Number of copies of the spin-j irrep among n qubits, from the hook-length
/// count of two-row standard Young tableaux:
///   c_j = C(n, n/2 − j) · (2j + 1) / (n/2 + j + 1).
inline Count multiplicity(std::size_t n, HalfInteger j) {
    detail::require_valid_spin(n, j, "multiplicity");
    const auto nn = static_cast<unsigned>(n);
    const auto tj = static_cast<unsigned>(j.twice());
    const unsigned lower = (nn - tj) / 2;
    const unsigned upper_plus_one = (nn + tj) / 2 + 1;
    const unsigned __int128 num = detail::binomial128(nn, lower) * (tj + 1);
    if (num % upper_plus_one != 0) throw std::logic_error("multiplicity: non-integral hook-length quotient");
    return static_cast<Count>(num / upper_plus_one);
}

/// Valid total spins for n qubits, largest first.
inline std::vector<HalfInteger> allowed_spins(std::size_t n) {
    detail::require_qubits(n, "allowed_spins");
    std::vector<HalfInteger> out;
    for (int t = static_cast<int>(n); t >= 0; t -= 2) out.push_back(HalfInteger::from_twice(t));
    return out;
}

struct MultiplicityRow {
    HalfInteger j;
    Count multiplicity;
};

/// (j, c_j) for every allowed j, largest j first.
inline std::vector<MultiplicityRow> multiplicity_table(std::size_t n) {
    std::vector<MultiplicityRow> rows;
    for (HalfInteger j : allowed_spins(n)) rows.push_back({j, multiplicity(n, j)});
    return rows;
}

/// Σ_j c_j; equals C(n, n/2) for even n (and C(n, ⌊n/2⌋) for odd n).
inline Count total_irrep_count(std::size_t n) {
    Count total = 0;
    for (const auto& row : multiplicity_table(n)) total += row.multiplicity;
    return total;
}

namespace detail {

template <typename Visit>
void walk_paths(std::size_t n, std::vector<HalfInteger>& prefix, const HalfInteger* target, Visit&& visit) {
    if (prefix.size() == n) {
        if (!target || prefix.back() == *target) visit(prefix);
        return;
    }
    const int remaining = static_cast<int>(n - prefix.size());
    for (int step : {+1, -1}) {
        const HalfInteger next = HalfInteger::from_twice(prefix.back().twice() + step);
        if (next.is_negative()) continue;
        if (target && std::abs(next.twice() - target->twice()) > remaining - 1) continue;
        prefix.push_back(next);
        walk_paths(n, prefix, target, visit);
        prefix.pop_back();
    }
}

}  // namespace detail

/// All coupling paths of n qubits ending at j, +½ steps ordered first.
inline std::vector<CouplingPath> enumerate_paths(std::size_t n, HalfInteger j) {
    detail::require_valid_spin(n, j, "enumerate_paths");
    std::vector<CouplingPath> out;
    std::vector<HalfInteger> prefix{HalfInteger::half()};
    detail::walk_paths(n, prefix, &j, [&](const std::vector<HalfInteger>& p) { out.emplace_back(p); });
    return out;
}

/// Every coupling path of n qubits regardless of final spin, in step order.
inline std::vector<CouplingPath> enumerate_all_paths(std::size_t n) {
    detail::require_qubits(n, "enumerate_all_paths");
    std::vector<CouplingPath> out;
    std::vector<HalfInteger> prefix{HalfInteger::half()};
    detail::walk_paths(n, prefix, nullptr, [&](const std::vector<HalfInteger>& p) { out.emplace_back(p); });
    return out;
}

}  // namespace framefree
