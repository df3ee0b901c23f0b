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
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "framefree/core/group_element.hpp"
#include "framefree/core/random_source.hpp"
#include "framefree/protocols/encoding.hpp"
#include "framefree/protocols/exchange.hpp"

namespace framefree {

/// Logical Bell test between two parties who each hold a four-qubit DFS
/// block and do not share a reference frame.
class LogicalBellTest {
public:
    LogicalBellTest() : LogicalBellTest(dfs_encoding(4)) {}

    explicit LogicalBellTest(LogicalEncoding enc) : enc_(std::move(enc)) {
        const LogicalPaulis p = dfs_logical_paulis(enc_);
        const double h = 1.0 / std::sqrt(2.0);
        alice_[0] = lift(p.z);
        alice_[1] = lift(p.x);
        bob_[0] = lift(h * (p.z + p.x));
        bob_[1] = lift(h * (p.z - p.x));
        // (|0_L 0_L⟩ + |1_L 1_L⟩)/√2 reshaped with Alice's index as the row.
        state_ = h * enc_.isometry * enc_.isometry.transpose();
    }

    const LogicalEncoding& encoding() const { return enc_; }

    /// Physical observable V A V† + (I − V V†) for a logical ±1 observable A.
    Matrix lift(const Matrix& logical) const {
        const Matrix& v = enc_.isometry;
        const auto d = v.rows();
        return v * logical * v.adjoint() + Matrix::Identity(d, d) - v * v.adjoint();
    }

    const Matrix& alice_observable(int k) const { return alice_.at(static_cast<std::size_t>(k)); }
    const Matrix& bob_observable(int k) const { return bob_.at(static_cast<std::size_t>(k)); }

    /// Two-party state as a matrix Ψ with amplitude ⟨a b|ψ⟩ = Ψ(a, b).
    const Matrix& state() const { return state_; }

    /// CHSH value after Alice's block is rotated by g and Bob's by h.
    double chsh(const GroupElement& g, const GroupElement& h) const {
        Matrix psi = apply_collective_rotation(g, enc_.n, state_);
        psi = apply_collective_rotation(h, enc_.n, Matrix(psi.transpose())).transpose();
        auto corr = [&](int a, int b) {
            return (psi.conjugate().cwiseProduct(alice_observable(a) * psi * bob_observable(b).transpose())).sum().real();
        };
        return corr(0, 0) + corr(0, 1) + corr(1, 0) - corr(1, 1);
    }

private:
    LogicalEncoding enc_;
    std::array<Matrix, 2> alice_;
    std::array<Matrix, 2> bob_;
    Matrix state_;
};

/// CHSH values for `trials` independent Haar rotations of each party's block.
inline std::vector<double> logical_bell_chsh_trials(RandomSource& rng, std::size_t trials) {
    if (trials < 1) throw std::invalid_argument("logical_bell_chsh_trials: trials must be at least 1");
    const LogicalBellTest test;
    std::vector<double> values;
    values.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        const GroupElement g = haar_random_su2(rng);
        const GroupElement h = haar_random_su2(rng);
        values.push_back(test.chsh(g, h));
    }
    return values;
}

/// Mean CHSH value over `trials` rotations.
inline double logical_bell_chsh(RandomSource& rng, std::size_t trials) {
    const std::vector<double> v = logical_bell_chsh_trials(rng, trials);
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum / static_cast<double>(v.size());
}

}  // namespace framefree
