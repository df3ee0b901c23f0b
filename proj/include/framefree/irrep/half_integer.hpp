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

#include <compare>
#include <cstdlib>
#include <ostream>
#include <string>

namespace framefree {

/// A value in ½ℤ stored exactly as twice itself. Used both for angular
/// momenta j (non-negative) and magnetic quantum numbers m (signed).
class HalfInteger {
public:
    constexpr HalfInteger() = default;

    static constexpr HalfInteger from_twice(int twice) { return HalfInteger(twice); }
    static constexpr HalfInteger whole(int value) { return HalfInteger(2 * value); }
    static constexpr HalfInteger half() { return HalfInteger(1); }

    constexpr int twice() const { return twice_; }
    constexpr double value() const { return twice_ / 2.0; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    /// Value of an integral half-integer; callers check is_integer().
    constexpr int as_integer() const { return twice_ / 2; }
    constexpr bool is_negative() const { return twice_ < 0; }

    /// 2j + 1, the dimension of the spin-j irrep.
    constexpr int irrep_dim() const { return twice_ + 1; }

    constexpr HalfInteger operator+(HalfInteger o) const { return HalfInteger(twice_ + o.twice_); }
    constexpr HalfInteger operator-(HalfInteger o) const { return HalfInteger(twice_ - o.twice_); }
    constexpr HalfInteger operator-() const { return HalfInteger(-twice_); }
    constexpr HalfInteger abs() const { return HalfInteger(twice_ < 0 ? -twice_ : twice_); }

    constexpr auto operator<=>(const HalfInteger&) const = default;

    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

private:
    constexpr explicit HalfInteger(int twice) : twice_(twice) {}
    int twice_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, HalfInteger h) { return os << h.str(); }

/// Integer difference (a − b) of two half-integers of equal parity.
constexpr int integer_difference(HalfInteger a, HalfInteger b) { return (a.twice() - b.twice()) / 2; }

constexpr bool same_parity(HalfInteger a, HalfInteger b) { return ((a.twice() - b.twice()) & 1) == 0; }

}  // namespace framefree
