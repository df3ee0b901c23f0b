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
#include <utility>
#include <vector>

#include "framefree/core/linalg.hpp"
#include "framefree/core/operations.hpp"
#include "framefree/core/states.hpp"
#include "framefree/irrep/coupling.hpp"
#include "framefree/irrep/decomposition.hpp"
#include "framefree/twirl/twirl_channel.hpp"

namespace framefree {

class UndecodableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Largest qubit count accepted by noiseless_subsystem_plan.
inline constexpr std::size_t kMaxPlanQubits = 10;

/// Probability below which a received state counts as outside the code.
inline constexpr double kMinCodeProbability = 1e-12;

enum class EncodingKind { dfs_j0, noiseless_subsystem, dephasing_m_sector };

inline const char* to_string(EncodingKind k) {
    switch (k) {
        case EncodingKind::dfs_j0: return "dfs_j0";
        case EncodingKind::noiseless_subsystem: return "noiseless_subsystem";
        case EncodingKind::dephasing_m_sector: return "dephasing_m_sector";
    }
    return "unknown";
}

/// Logical space embedded in n physical qubits.
///
/// For subspace codes (dfs_j0, dephasing_m_sector) `isometry` spans the code
/// and decoding compresses onto it. For a noiseless subsystem the logical
/// factor is the multiplicity space of spin `label`: `isometry` uses the
/// fixed carrier state m = j, and `sector` holds the full (carrier,
/// multiplicity) product basis used for decoding.
struct LogicalEncoding {
    std::size_t n;
    std::size_t logical_dim;
    Matrix isometry;
    EncodingKind kind;
    HalfInteger label;  // j for noiseless_subsystem, total m for dephasing_m_sector
    Matrix sector;      // noiseless_subsystem only
};

namespace detail {

inline LogicalEncoding checked_encoding(LogicalEncoding enc) {
    if (enc.isometry.rows() != static_cast<Eigen::Index>(checked_pow2(enc.n)) ||
        enc.isometry.cols() != static_cast<Eigen::Index>(enc.logical_dim)) {
        throw std::invalid_argument("LogicalEncoding: isometry shape does not match n and logical_dim");
    }
    if (enc.logical_dim == 0) throw std::invalid_argument("LogicalEncoding: empty logical space");
    if (isometry_residual(enc.isometry) > kStateTolerance) {
        throw std::invalid_argument("LogicalEncoding: isometry columns are not orthonormal");
    }
    return enc;
}

inline void require_orthonormal_pair(const StateVector& a, const StateVector& b) {
    if (a.dim() != 2 || b.dim() != 2) throw std::invalid_argument("dfs_basis_4qubit: basis vectors must be qubit states");
    if (std::abs(a.inner(b)) > kStateTolerance) throw std::invalid_argument("dfs_basis_4qubit: basis is not orthogonal");
}

}  // namespace detail

/// The two four-qubit singlet states
///   |0_L⟩ = ½(|01⟩ − |10⟩)(|01⟩ − |10⟩),
///   |1_L⟩ = (|0011⟩ + |1100⟩)/√3 − (|01⟩ + |10⟩)(|01⟩ + |10⟩)/(2√3),
/// with |0⟩, |1⟩ replaced by the given single-qubit basis.
inline std::pair<StateVector, StateVector> dfs_basis_4qubit(const StateVector& zero, const StateVector& one) {
    detail::require_orthonormal_pair(zero, one);
    const Vector e[2] = {zero.amplitudes(), one.amplitudes()};
    auto ket = [&](int a, int b, int c, int d) { return tensor(tensor(tensor(e[a], e[b]), e[c]), e[d]); };
    const Vector singlet_pairs = 0.5 * (ket(0, 1, 0, 1) - ket(0, 1, 1, 0) - ket(1, 0, 0, 1) + ket(1, 0, 1, 0));
    const Vector triplet_pairs = ket(0, 1, 0, 1) + ket(0, 1, 1, 0) + ket(1, 0, 0, 1) + ket(1, 0, 1, 0);
    const Vector other = (ket(0, 0, 1, 1) + ket(1, 1, 0, 0)) / std::sqrt(3.0) - triplet_pairs / (2.0 * std::sqrt(3.0));
    return {StateVector(singlet_pairs), StateVector(other)};
}

inline std::pair<StateVector, StateVector> dfs_basis_4qubit() {
    return dfs_basis_4qubit(StateVector::basis(2, 0), StateVector::basis(2, 1));
}

/// Decoherence-free subspace: the j = 0 sector of an even number of qubits,
/// one logical basis state per coupling path. Columns run through the paths
/// in reverse block order, so column 0 is the product of pair singlets and
/// for n = 4 the columns are exactly the pair returned by dfs_basis_4qubit().
inline LogicalEncoding dfs_encoding(const IrrepDecomposition& d) {
    const HalfInteger zero{};
    const Count c = d.multiplicity_of(zero);
    if (c == 0) throw std::invalid_argument("dfs_encoding: odd qubit count has no j = 0 sector");
    Matrix v(static_cast<Eigen::Index>(d.dim()), static_cast<Eigen::Index>(c));
    for (std::size_t r = 0; r < c; ++r) v.col(static_cast<Eigen::Index>(r)) = d.block(zero, c - 1 - r).isometry.col(0);
    return detail::checked_encoding({d.n(), static_cast<std::size_t>(c), std::move(v), EncodingKind::dfs_j0, zero, {}});
}

inline LogicalEncoding dfs_encoding(std::size_t n) { return dfs_encoding(decompose(n)); }

/// DFS encoding from an explicit orthonormal set of 4-qubit singlet states.
inline LogicalEncoding dfs_encoding(const std::vector<StateVector>& basis) {
    if (basis.empty()) throw std::invalid_argument("dfs_encoding: empty basis");
    const std::size_t n = detail::qubits_for_dim(basis.front().dim());
    Matrix v(static_cast<Eigen::Index>(basis.front().dim()), static_cast<Eigen::Index>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (basis[k].dim() != basis.front().dim()) throw std::invalid_argument("dfs_encoding: mixed dimensions");
        v.col(static_cast<Eigen::Index>(k)) = basis[k].amplitudes();
    }
    return detail::checked_encoding({n, basis.size(), std::move(v), EncodingKind::dfs_j0, HalfInteger{}, {}});
}

/// Noiseless subsystem on the multiplicity factor of spin j.
inline LogicalEncoding noiseless_subsystem(const IrrepDecomposition& d, HalfInteger j) {
    const Count c = d.multiplicity_of(j);
    if (c == 0) throw std::invalid_argument("noiseless_subsystem: j = " + j.str() + " does not occur");
    Matrix sector = d.sector_isometry(j);
    Matrix v = sector.leftCols(static_cast<Eigen::Index>(c));  // carrier index 0: m = j
    return detail::checked_encoding(
        {d.n(), static_cast<std::size_t>(c), std::move(v), EncodingKind::noiseless_subsystem, j, std::move(sector)});
}

/// The spin with the largest multiplicity; ties go to the smaller j.
inline HalfInteger most_populous_spin(std::size_t n) {
    HalfInteger best{};
    Count best_c = 0;
    for (const auto& row : multiplicity_table(n)) {
        if (row.multiplicity >= best_c) {  // table is j-descending, so >= keeps the smaller j on ties
            best = row.j;
            best_c = row.multiplicity;
        }
    }
    return best;
}

inline LogicalEncoding noiseless_subsystem_plan(std::size_t n) {
    if (n < 2 || n > kMaxPlanQubits) {
        throw std::invalid_argument("noiseless_subsystem_plan: qubit count " + std::to_string(n) + " outside [2, 10]");
    }
    return noiseless_subsystem(decompose(n), most_populous_spin(n));
}

/// Code protected by collective dephasing: the computational basis states
/// with total J_z = twice_m / 2, in ascending index order.
inline LogicalEncoding dephasing_encoding(std::size_t n, int twice_m) {
    if (n < 1 || n > kMaxDecomposeQubits) throw std::invalid_argument("dephasing_encoding: qubit count out of range");
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) {
        if (total_twice_m(n, i) == twice_m) members.push_back(i);
    }
    if (members.empty()) throw std::invalid_argument("dephasing_encoding: no basis state has 2m = " + std::to_string(twice_m));
    Matrix v = Matrix::Zero(static_cast<Eigen::Index>(std::size_t{1} << n), static_cast<Eigen::Index>(members.size()));
    for (std::size_t k = 0; k < members.size(); ++k) v(static_cast<Eigen::Index>(members[k]), static_cast<Eigen::Index>(k)) = 1.0;
    return detail::checked_encoding(
        {n, members.size(), std::move(v), EncodingKind::dephasing_m_sector, HalfInteger::from_twice(twice_m), {}});
}

/// Largest dephasing-protected sector: m = 0 (even n) or m = ½ (odd n).
inline LogicalEncoding dephasing_encoding(std::size_t n) { return dephasing_encoding(n, static_cast<int>(n % 2)); }

inline DensityOperator encode_logical(const StateVector& psi, const LogicalEncoding& enc) {
    if (psi.dim() != enc.logical_dim) {
        throw std::invalid_argument("encode_logical: logical state has dimension " + std::to_string(psi.dim()) +
                                    ", encoding expects " + std::to_string(enc.logical_dim));
    }
    const Vector phys = enc.isometry * psi.amplitudes();
    return DensityOperator::from_trusted(phys * phys.adjoint());
}

inline DensityOperator encode_logical(const DensityOperator& rho, const LogicalEncoding& enc) {
    if (rho.dim() != enc.logical_dim) throw std::invalid_argument("encode_logical: dimension mismatch");
    return DensityOperator::from_trusted(enc.isometry * rho.matrix() * enc.isometry.adjoint());
}

/// Recovers the logical state. Subspace codes compress onto the code space;
/// a noiseless subsystem projects onto its spin sector, splits it as
/// carrier ⊗ multiplicity and traces out the carrier. The result is
/// renormalized by the in-code probability.
inline DensityOperator decode_logical(const DensityOperator& rho_phys, const LogicalEncoding& enc) {
    if (rho_phys.dim() != static_cast<std::size_t>(enc.isometry.rows())) {
        throw std::invalid_argument("decode_logical: physical state has dimension " + std::to_string(rho_phys.dim()) +
                                    ", expected 2^" + std::to_string(enc.n));
    }
    Matrix logical;
    if (enc.kind == EncodingKind::noiseless_subsystem) {
        const Matrix local = enc.sector.adjoint() * rho_phys.matrix() * enc.sector;
        const auto c = static_cast<Eigen::Index>(enc.logical_dim);
        const Eigen::Index carrier = local.rows() / c;
        logical = Matrix::Zero(c, c);
        for (Eigen::Index m = 0; m < carrier; ++m) logical += local.block(m * c, m * c, c, c);
    } else {
        logical = enc.isometry.adjoint() * rho_phys.matrix() * enc.isometry;
    }
    const double p = logical.trace().real();
    if (!(p >= kMinCodeProbability)) {
        throw UndecodableError("decode_logical: in-code probability " + std::to_string(p) + " below threshold");
    }
    logical /= p;
    return DensityOperator::from_trusted(0.5 * (logical + logical.adjoint()));
}

}  // namespace framefree
