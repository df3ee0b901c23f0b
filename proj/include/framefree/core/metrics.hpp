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
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "framefree/core/linalg.hpp"
#include "framefree/core/states.hpp"

namespace framefree {

namespace detail {
inline void require_same_dim(const DensityOperator& a, const DensityOperator& b, const char* what) {
    if (a.dim() != b.dim()) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}
}  // namespace detail

/// Uhlmann fidelity (tr √(√ρ σ √ρ))², clamped to [0, 1].
///
/// Evaluated on the support of whichever argument has lower rank, so that
/// square roots of round-off eigenvalues cannot inflate the result.
inline double fidelity(const DensityOperator& rho, const DensityOperator& sigma) {
    detail::require_same_dim(rho, sigma, "fidelity");
    constexpr double kSupportTol = 1e-13;
    constexpr double kNoiseFloor = 1e-15;
    HermitianEigen er = hermitian_eigen(rho.matrix());
    HermitianEigen es = hermitian_eigen(sigma.matrix());
    auto rank = [&](const RealVector& ev) { return (ev.array() > kSupportTol).count(); };
    const bool swap = rank(es.values) < rank(er.values);
    const HermitianEigen& base = swap ? es : er;
    const Matrix& other = swap ? rho.matrix() : sigma.matrix();

    std::vector<Eigen::Index> support;
    for (Eigen::Index i = 0; i < base.values.size(); ++i) {
        if (base.values[i] > kSupportTol) support.push_back(i);
    }
    const auto k = static_cast<Eigen::Index>(support.size());
    Matrix w(base.vectors.rows(), k);
    RealVector root(k);
    for (Eigen::Index c = 0; c < k; ++c) {
        w.col(c) = base.vectors.col(support[static_cast<std::size_t>(c)]);
        root[c] = std::sqrt(base.values[support[static_cast<std::size_t>(c)]]);
    }
    const Matrix inner = root.asDiagonal() * (w.adjoint() * other * w) * root.asDiagonal();
    const RealVector ev = hermitian_eigenvalues(inner);
    double root_sum = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev[i] > kNoiseFloor) root_sum += std::sqrt(ev[i]);
    }
    return std::clamp(root_sum * root_sum, 0.0, 1.0);
}

/// ⟨ψ|ρ|ψ⟩, the pure-state special case.
inline double fidelity(const DensityOperator& rho, const StateVector& psi) {
    if (rho.dim() != psi.dim()) throw std::invalid_argument("fidelity: dimension mismatch");
    return std::clamp(rho.expectation(psi), 0.0, 1.0);
}

/// ½ Σ |λ_i(ρ − σ)|, clamped to [0, 1].
inline double trace_distance(const DensityOperator& rho, const DensityOperator& sigma) {
    detail::require_same_dim(rho, sigma, "trace_distance");
    const RealVector ev = hermitian_eigenvalues(rho.matrix() - sigma.matrix());
    return std::clamp(0.5 * ev.cwiseAbs().sum(), 0.0, 1.0);
}

}  // namespace framefree
