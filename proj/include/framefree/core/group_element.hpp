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
#include "framefree/core/operations.hpp"
#include "framefree/core/random_source.hpp"
#include "framefree/core/states.hpp"

namespace framefree {

/// An element of SU(2) in its defining 2×2 representation.
class GroupElement {
public:
    explicit GroupElement(Matrix m) : m_(std::move(m)) {
        if (m_.rows() != 2 || m_.cols() != 2) throw std::invalid_argument("GroupElement: matrix must be 2x2");
        if (!all_finite(m_)) throw std::invalid_argument("GroupElement: non-finite entry");
        const double unit = unitarity_residual(m_);
        if (unit > kStateTolerance) {
            throw std::invalid_argument("GroupElement: not unitary (residual " + std::to_string(unit) + ")");
        }
        const double det = std::abs(m_.determinant() - cplx{1.0, 0.0});
        if (det > kStateTolerance) {
            throw std::invalid_argument("GroupElement: determinant differs from 1 by " + std::to_string(det));
        }
    }

    static GroupElement identity() { return GroupElement(Matrix::Identity(2, 2)); }

    /// Unit quaternion (a, b, c, d) ↦ [[a+ib, c+id], [−c+id, a−ib]].
    static GroupElement from_quaternion(double a, double b, double c, double d) {
        const double norm = std::sqrt(a * a + b * b + c * c + d * d);
        if (!(norm > 0.0)) throw std::invalid_argument("GroupElement::from_quaternion: zero quaternion");
        a /= norm;
        b /= norm;
        c /= norm;
        d /= norm;
        Matrix m(2, 2);
        m << cplx{a, b}, cplx{c, d}, cplx{-c, d}, cplx{a, -b};
        return GroupElement(std::move(m));
    }

    /// exp(−i θ n·σ / 2) for a unit axis n.
    static GroupElement rotation(double theta, double nx, double ny, double nz) {
        const double len = std::sqrt(nx * nx + ny * ny + nz * nz);
        if (!(len > 0.0)) throw std::invalid_argument("GroupElement::rotation: zero axis");
        const double s = std::sin(theta / 2) / len;
        return from_quaternion(std::cos(theta / 2), -nz * s, -ny * s, -nx * s);
    }

    const Matrix& matrix() const { return m_; }
    cplx operator()(int r, int c) const { return m_(r, c); }

    GroupElement operator*(const GroupElement& rhs) const { return GroupElement(m_ * rhs.m_); }
    GroupElement inverse() const { return GroupElement(m_.adjoint()); }

private:
    Matrix m_;
};

/// Haar-distributed SU(2) element: four independent standard normals give a
/// uniformly random unit quaternion.
inline GroupElement haar_random_su2(RandomSource& rng) {
    for (;;) {
        const double a = rng.normal();
        const double b = rng.normal();
        const double c = rng.normal();
        const double d = rng.normal();
        if (a * a + b * b + c * c + d * d > 1e-300) return GroupElement::from_quaternion(a, b, c, d);
    }
}

/// g ⊗ g ⊗ … ⊗ g with `n` factors.
inline Matrix collective_rotation(const GroupElement& g, std::size_t n) {
    if (n == 0) throw std::invalid_argument("collective_rotation: n must be at least 1");
    checked_pow2(n);
    Matrix out = g.matrix();
    for (std::size_t k = 1; k < n; ++k) out = tensor(out, g.matrix());
    return out;
}

/// Applies the single-qubit matrix `u` to qubit `qubit` (0-based, qubit 0
/// most significant) of every column of `m`, in place.
inline void apply_single_qubit(const Matrix& u, std::size_t qubit, std::size_t n, Matrix& m) {
    const std::size_t dim = checked_pow2(n);
    if (static_cast<std::size_t>(m.rows()) != dim) throw std::invalid_argument("apply_single_qubit: dimension mismatch");
    if (qubit >= n) throw std::invalid_argument("apply_single_qubit: qubit out of range");
    const std::size_t stride = std::size_t{1} << (n - 1 - qubit);
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & stride) continue;
        const auto i0 = static_cast<Eigen::Index>(base);
        const auto i1 = static_cast<Eigen::Index>(base | stride);
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            const cplx x0 = m(i0, c);
            const cplx x1 = m(i1, c);
            m(i0, c) = u(0, 0) * x0 + u(0, 1) * x1;
            m(i1, c) = u(1, 0) * x0 + u(1, 1) * x1;
        }
    }
}

/// (g⊗…⊗g) · m without materializing the 2^n × 2^n rotation.
inline Matrix apply_collective_rotation(const GroupElement& g, std::size_t n, Matrix m) {
    for (std::size_t q = 0; q < n; ++q) apply_single_qubit(g.matrix(), q, n, m);
    return m;
}

inline StateVector apply_collective_rotation(const GroupElement& g, std::size_t n, const StateVector& psi) {
    Matrix col = psi.amplitudes();
    return StateVector(apply_collective_rotation(g, n, std::move(col)).col(0));
}

/// U ρ U† with U = g^{⊗n}.
inline DensityOperator conjugate_collective(const GroupElement& g, std::size_t n, const DensityOperator& rho) {
    Matrix left = apply_collective_rotation(g, n, rho.matrix());
    Matrix both = apply_collective_rotation(g, n, Matrix(left.adjoint())).adjoint();
    return DensityOperator::from_trusted(std::move(both));
}

}  // namespace framefree
