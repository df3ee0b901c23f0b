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

#include "framefree/quantum_core.hpp"

namespace framefree::testing {

inline Vector random_vector(std::size_t dim, RandomSource& rng) {
    Vector v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = cplx{rng.normal(), rng.normal()};
    return v;
}

inline StateVector random_pure_state(std::size_t dim, RandomSource& rng) {
    return StateVector::normalized(random_vector(dim, rng));
}

/// Ginibre-distributed mixed state G G† / tr(G G†), full rank almost surely.
inline DensityOperator random_density(std::size_t dim, RandomSource& rng, std::size_t rank = 0) {
    if (rank == 0) rank = dim;
    Matrix g(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(rank));
    for (Eigen::Index i = 0; i < g.rows(); ++i)
        for (Eigen::Index k = 0; k < g.cols(); ++k) g(i, k) = cplx{rng.normal(), rng.normal()};
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityOperator(rho);
}

inline double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

/// 2^n × 2^n permutation matrix exchanging qubits a and b (1-based, qubit 1
/// most significant), built by explicit bit manipulation.
inline Matrix swap_matrix_oracle(std::size_t n, std::size_t a, std::size_t b) {
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t pa = n - a;
    const std::size_t pb = n - b;
    Matrix s = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        const std::size_t ba = (i >> pa) & 1;
        const std::size_t bb = (i >> pb) & 1;
        std::size_t j = i & ~((std::size_t{1} << pa) | (std::size_t{1} << pb));
        j |= (ba << pb) | (bb << pa);
        s(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = 1.0;
    }
    return s;
}

}  // namespace framefree::testing
