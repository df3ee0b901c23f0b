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

#include <cstdint>
#include <limits>
#include <random>

namespace framefree {

/// Counter-based, splittable pseudo-random source.
///
/// Each output is a pure function of (key, counter), so a stream can be
/// partitioned deterministically: `split(i)` derives an independent child
/// keyed by `i` without consuming anything from the parent. Satisfies
/// UniformRandomBitGenerator so it plugs into <random> distributions.
class RandomSource {
public:
    using result_type = std::uint64_t;

    explicit RandomSource(std::uint64_t seed = 0) : seed_(seed), key_(mix(seed ^ kSeedSalt)) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return mix(key_ + mix(counter_++ + kGolden)); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    double normal() { return normal_(*this); }

    /// Independent child stream keyed by `index`; the parent is untouched.
    RandomSource split(std::uint64_t index) const {
        RandomSource child(seed_);
        child.key_ = mix(key_ ^ mix(index + kSplitSalt));
        return child;
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t counter() const { return counter_; }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t kSeedSalt = 0xD1B54A32D192ED03ULL;
    static constexpr std::uint64_t kSplitSalt = 0x8CB92BA72F3D8DD7ULL;

    // splitmix64 finalizer
    static constexpr std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace framefree
