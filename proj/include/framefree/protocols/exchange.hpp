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

#include "framefree/core/linalg.hpp"
#include "framefree/protocols/encoding.hpp"

namespace framefree {

/// Permutation matrix exchanging qubits `a` and `b` (1-based, qubit 1 most
/// significant).
inline Matrix swap_operator(std::size_t n, std::size_t a, std::size_t b) {
    const std::size_t dim = checked_pow2(n);
    if (a < 1 || a > n || b < 1 || b > n) {
        throw std::invalid_argument("swap_operator: qubit indices must lie in [1, " + std::to_string(n) + "]");
    }
    const std::size_t bit_a = std::size_t{1} << (n - a);
    const std::size_t bit_b = std::size_t{1} << (n - b);
    Matrix s = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        std::size_t k = i & ~(bit_a | bit_b);
        if (i & bit_a) k |= bit_b;
        if (i & bit_b) k |= bit_a;
        s(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) = 1.0;
    }
    return s;
}

struct ExchangeAction {
    Matrix action;   // V† S V on the logical space
    double leakage;  // ‖(I − V V†) S V‖_F
};

/// Restriction of the exchange of qubits `a` and `b` to a DFS code.
inline ExchangeAction exchange_logical_action(std::size_t a, std::size_t b, const LogicalEncoding& enc) {
    if (enc.kind != EncodingKind::dfs_j0) {
        throw std::invalid_argument(std::string("exchange_logical_action: encoding kind ") + to_string(enc.kind) +
                                    " is not dfs_j0");
    }
    if (a == b) throw std::invalid_argument("exchange_logical_action: qubits must differ");
    const Matrix sv = swap_operator(enc.n, a, b) * enc.isometry;
    Matrix action = enc.isometry.adjoint() * sv;
    const double leakage = (sv - enc.isometry * action).norm();
    return {std::move(action), leakage};
}

struct LogicalPaulis {
    Matrix x;
    Matrix y;
    Matrix z;
};

/// Logical Pauli operators of the four-qubit DFS built from exchanges.
/// Z_L is minus the exchange of qubits 1 and 2. X_L is the part of the
/// exchange of qubits 2 and 3 orthogonal to I and Z_L, rescaled to square to
/// the identity, with the sign fixed so that ⟨0_L|X_L|1_L⟩ > 0.
inline LogicalPaulis dfs_logical_paulis(const LogicalEncoding& enc) {
    if (enc.logical_dim != 2) {
        throw std::invalid_argument("dfs_logical_paulis: code has dimension " + std::to_string(enc.logical_dim) +
                                    ", expected 2");
    }
    const Matrix z = -exchange_logical_action(1, 2, enc).action;
    const Matrix s23 = exchange_logical_action(2, 3, enc).action;
    const Matrix id = Matrix::Identity(2, 2);
    Matrix t = s23 - 0.5 * s23.trace() * id - 0.5 * (s23 * z).trace() * z;
    const double norm2 = 0.5 * (t * t).trace().real();
    if (norm2 < 1e-24) throw std::invalid_argument("dfs_logical_paulis: exchanges do not generate a qubit algebra");
    t /= std::sqrt(norm2);
    const cplx off = t(0, 1);
    if (std::abs(off) > 0.0) t *= std::abs(off) / off;
    t = 0.5 * (t + t.adjoint()).eval();
    const Matrix y = cplx(0.0, 1.0) * t * z;
    return {std::move(t), y, z};
}

}  // namespace framefree
