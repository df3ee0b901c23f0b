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

namespace framefree {

/// Normalized pure state. Construction rejects non-finite or non-unit input.
class StateVector {
public:
    explicit StateVector(Vector amplitudes) : amps_(std::move(amplitudes)) {
        if (amps_.size() == 0) throw std::invalid_argument("StateVector: empty amplitude vector");
        if (!amps_.allFinite()) throw std::invalid_argument("StateVector: non-finite amplitude");
        const double norm = amps_.norm();
        if (std::abs(norm - 1.0) > kStateTolerance) {
            throw std::invalid_argument("StateVector: norm " + std::to_string(norm) + " is not 1");
        }
    }

    /// Rescales `v` to unit norm; rejects the zero vector.
    static StateVector normalized(const Vector& v) {
        const double norm = v.norm();
        if (!(norm > 0.0) || !std::isfinite(norm)) {
            throw std::invalid_argument("StateVector::normalized: zero or non-finite vector");
        }
        return StateVector(v / norm);
    }

    static StateVector basis(std::size_t dim, std::size_t index) {
        if (index >= dim) throw std::invalid_argument("StateVector::basis: index out of range");
        Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
        v[static_cast<Eigen::Index>(index)] = 1.0;
        return StateVector(std::move(v));
    }

    std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
    const Vector& amplitudes() const { return amps_; }
    cplx operator[](std::size_t i) const { return amps_[static_cast<Eigen::Index>(i)]; }

    cplx inner(const StateVector& other) const {
        if (other.dim() != dim()) throw std::invalid_argument("StateVector::inner: dimension mismatch");
        return amps_.dot(other.amps_);
    }

    /// Applies a unitary; the result is re-validated.
    StateVector evolved(const Matrix& unitary) const {
        if (unitary.cols() != amps_.size() || unitary.rows() != amps_.size()) {
            throw std::invalid_argument("StateVector::evolved: dimension mismatch");
        }
        return StateVector(unitary * amps_);
    }

private:
    Vector amps_;
};

/// Density operator: Hermitian, unit trace, positive semidefinite.
class DensityOperator {
public:
    /// Full validation, including an eigenvalue check for positivity.
    explicit DensityOperator(Matrix m) : m_(std::move(m)) {
        validate_cheap();
        const RealVector ev = hermitian_eigenvalues(m_);
        if (ev.size() > 0 && ev.minCoeff() < -kStateTolerance) {
            throw std::invalid_argument("DensityOperator: negative eigenvalue " +
                                        std::to_string(ev.minCoeff()));
        }
    }

    /// For outputs of maps that are completely positive by construction.
    /// Shape, finiteness, Hermiticity and trace are still checked.
    static DensityOperator from_trusted(Matrix m) {
        DensityOperator rho(std::move(m), Trusted{});
        rho.validate_cheap();
        return rho;
    }

    static DensityOperator pure(const StateVector& psi) {
        return from_trusted(psi.amplitudes() * psi.amplitudes().adjoint());
    }

    static DensityOperator maximally_mixed(std::size_t dim) {
        const auto d = static_cast<Eigen::Index>(dim);
        return from_trusted(Matrix::Identity(d, d) / static_cast<double>(dim));
    }

    std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    const Matrix& matrix() const { return m_; }
    cplx operator()(std::size_t r, std::size_t c) const {
        return m_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }

    double purity() const { return (m_ * m_).trace().real(); }

    /// ⟨ψ|ρ|ψ⟩.
    double expectation(const StateVector& psi) const {
        if (psi.dim() != dim()) throw std::invalid_argument("DensityOperator::expectation: dimension mismatch");
        return psi.amplitudes().dot(m_ * psi.amplitudes()).real();
    }

    double expectation(const Matrix& observable) const {
        if (observable.rows() != m_.rows() || observable.cols() != m_.cols()) {
            throw std::invalid_argument("DensityOperator::expectation: dimension mismatch");
        }
        return (m_ * observable).trace().real();
    }

private:
    struct Trusted {};
    DensityOperator(Matrix m, Trusted) : m_(std::move(m)) {}

    void validate_cheap() {
        if (m_.rows() != m_.cols() || m_.rows() == 0) {
            throw std::invalid_argument("DensityOperator: matrix must be square and non-empty");
        }
        if (!all_finite(m_)) throw std::invalid_argument("DensityOperator: non-finite entry");
        const double herm = hermiticity_residual(m_);
        if (herm > kStateTolerance) {
            throw std::invalid_argument("DensityOperator: not Hermitian (residual " + std::to_string(herm) + ")");
        }
        const double tr = m_.trace().real();
        if (std::abs(tr - 1.0) > kStateTolerance) {
            throw std::invalid_argument("DensityOperator: trace " + std::to_string(tr) + " is not 1");
        }
        m_ = 0.5 * (m_ + m_.adjoint()).eval();
    }

    Matrix m_;
};

}  // namespace framefree
