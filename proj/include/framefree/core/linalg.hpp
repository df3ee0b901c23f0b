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
#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace framefree {

using cplx = std::complex<double>;

/// Dense complex matrix; every operator in the library is one of these.
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Absolute tolerance used by the validating constructors.
inline constexpr double kStateTolerance = 1e-10;

inline bool all_finite(const Matrix& m) { return m.allFinite(); }

inline double hermiticity_residual(const Matrix& m) {
    if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
    if (m.size() == 0) return 0.0;
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

inline double unitarity_residual(const Matrix& m) {
    if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
    if (m.size() == 0) return 0.0;
    return (m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

/// Largest deviation of `v† v` from the identity (columns orthonormal).
inline double isometry_residual(const Matrix& v) {
    if (v.cols() == 0) return 0.0;
    return (v.adjoint() * v - Matrix::Identity(v.cols(), v.cols())).cwiseAbs().maxCoeff();
}

/// Eigen-decomposition of a Hermitian matrix. Eigenvalues are real and
/// sorted ascending; the input is symmetrized before solving so that
/// round-off asymmetry cannot leak into the spectrum.
struct HermitianEigen {
    RealVector values;
    Matrix vectors;
};

inline HermitianEigen hermitian_eigen(const Matrix& m, bool want_vectors = true) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("hermitian_eigen: matrix is not square");
    }
    const Matrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(
        sym, want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eigen: eigen-solver did not converge");
    }
    HermitianEigen out;
    out.values = solver.eigenvalues();
    if (want_vectors) out.vectors = solver.eigenvectors();
    return out;
}

inline RealVector hermitian_eigenvalues(const Matrix& m) {
    return hermitian_eigen(m, false).values;
}

/// Number of eigenvalues of a Hermitian matrix above `tol`.
inline std::size_t numerical_rank(const Matrix& m, double tol = 1e-9) {
    const RealVector ev = hermitian_eigenvalues(m);
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev[i] > tol) ++rank;
    }
    return rank;
}

inline std::size_t checked_pow2(std::size_t n) {
    if (n >= 8 * sizeof(std::size_t) - 1) {
        throw std::invalid_argument("qubit count too large: " + std::to_string(n));
    }
    return std::size_t{1} << n;
}

}  // namespace framefree
