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

#include <bit>
#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "framefree/core/group_element.hpp"
#include "framefree/core/metrics.hpp"
#include "framefree/core/random_source.hpp"
#include "framefree/core/states.hpp"
#include "framefree/irrep/decomposition.hpp"

namespace framefree {

/// Number of spin-down qubits in a computational basis index; total
/// J_z eigenvalue is m = n/2 − popcount.
inline int total_twice_m(std::size_t n, std::size_t index) {
    return static_cast<int>(n) - 2 * std::popcount(index);
}

/// Decohering channel for a missing (full_su2) or partial (u1_dephasing)
/// shared reference frame. Immutable; apply() is pure.
class TwirlChannel {
public:
    enum class Kind { full_su2, u1_dephasing };

    /// Average over every collective SU(2) rotation.
    static TwirlChannel full_su2(std::size_t n) {
        return full_su2(std::make_shared<const IrrepDecomposition>(decompose(n)));
    }

    static TwirlChannel full_su2(std::shared_ptr<const IrrepDecomposition> d) {
        if (!d) throw std::invalid_argument("TwirlChannel::full_su2: null decomposition");
        TwirlChannel ch(Kind::full_su2, d->n());
        for (const auto& row : d->multiplicity_table()) {
            ch.sectors_.push_back(Sector{row.j, static_cast<Eigen::Index>(row.multiplicity), d->sector_isometry(row.j)});
        }
        ch.decomposition_ = std::move(d);
        return ch;
    }

    /// Average over collective rotations about the shared z axis.
    static TwirlChannel u1_dephasing(std::size_t n) {
        if (n < 1 || n > kMaxDecomposeQubits) {
            throw std::invalid_argument("TwirlChannel::u1_dephasing: qubit count " + std::to_string(n) +
                                        " outside [1, " + std::to_string(kMaxDecomposeQubits) + "]");
        }
        TwirlChannel ch(Kind::u1_dephasing, n);
        ch.twice_m_.resize(std::size_t{1} << n);
        for (std::size_t i = 0; i < ch.twice_m_.size(); ++i) ch.twice_m_[i] = total_twice_m(n, i);
        return ch;
    }

    Kind kind() const { return kind_; }
    std::size_t n() const { return n_; }
    std::size_t dim() const { return std::size_t{1} << n_; }

    const IrrepDecomposition& decomposition() const {
        if (!decomposition_) throw std::logic_error("TwirlChannel: dephasing channel has no irrep decomposition");
        return *decomposition_;
    }

    std::shared_ptr<const IrrepDecomposition> shared_decomposition() const { return decomposition_; }

    /// Projector onto the total-m eigenspace with m = twice_m / 2.
    Matrix m_sector_projector(int twice_m) const {
        Matrix p = Matrix::Zero(static_cast<Eigen::Index>(dim()), static_cast<Eigen::Index>(dim()));
        for (std::size_t i = 0; i < dim(); ++i) {
            if (total_twice_m(n_, i) == twice_m) p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0;
        }
        return p;
    }

    DensityOperator apply(const DensityOperator& rho) const {
        if (rho.dim() != dim()) {
            throw std::invalid_argument("TwirlChannel::apply: state dimension " + std::to_string(rho.dim()) +
                                        " does not match 2^" + std::to_string(n_));
        }
        return kind_ == Kind::full_su2 ? apply_su2(rho) : apply_dephasing(rho);
    }

private:
    // One spin-j sector: isometry columns are (carrier m, multiplicity r).
    struct Sector {
        HalfInteger j;
        Eigen::Index multiplicity;
        Matrix isometry;
    };

    TwirlChannel(Kind kind, std::size_t n) : kind_(kind), n_(n) {}

    // Within each j sector the carrier factor becomes maximally mixed and the
    // multiplicity factor is kept:
    //   M_{r r'} = (2j+1)⁻¹ Σ_m ⟨j m r|ρ|j m r'⟩,   E(ρ) = Σ_j Σ_m Σ_{r r'} M_{r r'} |j m r⟩⟨j m r'|.
    DensityOperator apply_su2(const DensityOperator& rho) const {
        const auto d = static_cast<Eigen::Index>(dim());
        Matrix out = Matrix::Zero(d, d);
        for (const auto& s : sectors_) {
            const Eigen::Index carrier = s.j.irrep_dim();
            const Eigen::Index c = s.multiplicity;
            const Matrix local = s.isometry.adjoint() * rho.matrix() * s.isometry;
            Matrix mult = Matrix::Zero(c, c);
            for (Eigen::Index m = 0; m < carrier; ++m) mult += local.block(m * c, m * c, c, c);
            mult /= static_cast<double>(carrier);
            Matrix spread(d, carrier * c);
            for (Eigen::Index m = 0; m < carrier; ++m) spread.middleCols(m * c, c) = s.isometry.middleCols(m * c, c) * mult;
            out.noalias() += spread * s.isometry.adjoint();
        }
        return DensityOperator::from_trusted(std::move(out));
    }

    DensityOperator apply_dephasing(const DensityOperator& rho) const {
        Matrix out = rho.matrix();
        for (std::size_t r = 0; r < dim(); ++r) {
            for (std::size_t c = 0; c < dim(); ++c) {
                if (twice_m_[r] != twice_m_[c]) out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = 0.0;
            }
        }
        return DensityOperator::from_trusted(std::move(out));
    }

    Kind kind_;
    std::size_t n_;
    std::shared_ptr<const IrrepDecomposition> decomposition_;
    std::vector<Sector> sectors_;
    std::vector<int> twice_m_;
};

/// Exact collective SU(2) twirl, computed from the irrep block structure.
inline DensityOperator twirl_su2_exact(const DensityOperator& rho, const TwirlChannel& ch) {
    if (ch.kind() != TwirlChannel::Kind::full_su2) throw std::invalid_argument("twirl_su2_exact: channel is not full_su2");
    return ch.apply(rho);
}

/// Collective dephasing: Σ_m P_m ρ P_m over total-m sectors.
inline DensityOperator twirl_u1_dephasing(const DensityOperator& rho, const TwirlChannel& ch) {
    if (ch.kind() != TwirlChannel::Kind::u1_dephasing) {
        throw std::invalid_argument("twirl_u1_dephasing: channel is not u1_dephasing");
    }
    return ch.apply(rho);
}

namespace detail {
inline std::size_t qubits_for_dim(std::size_t dim) {
    if (dim < 2 || !std::has_single_bit(dim)) throw std::invalid_argument("state dimension is not 2^n with n >= 1");
    return static_cast<std::size_t>(std::countr_zero(dim));
}
}  // namespace detail

/// (1/K) Σ_k U_k ρ U_k† over the given group elements, U_k = g_k^{⊗n}.
inline DensityOperator twirl_su2_average(const DensityOperator& rho, std::span<const GroupElement> elements) {
    if (elements.empty()) throw std::invalid_argument("twirl_su2_average: no group elements");
    const std::size_t n = detail::qubits_for_dim(rho.dim());
    Matrix acc = Matrix::Zero(rho.matrix().rows(), rho.matrix().cols());
    for (const auto& g : elements) acc += conjugate_collective(g, n, rho).matrix();
    acc /= static_cast<double>(elements.size());
    acc = 0.5 * (acc + acc.adjoint()).eval();
    acc /= acc.trace().real();
    return DensityOperator::from_trusted(std::move(acc));
}

/// Monte Carlo estimate of the collective twirl from `samples` Haar draws.
inline DensityOperator twirl_su2_monte_carlo(const DensityOperator& rho, std::size_t samples, RandomSource& rng) {
    if (samples < 1) throw std::invalid_argument("twirl_su2_monte_carlo: samples must be at least 1");
    const std::size_t n = detail::qubits_for_dim(rho.dim());
    Matrix acc = Matrix::Zero(rho.matrix().rows(), rho.matrix().cols());
    for (std::size_t k = 0; k < samples; ++k) acc += conjugate_collective(haar_random_su2(rng), n, rho).matrix();
    acc /= static_cast<double>(samples);
    acc = 0.5 * (acc + acc.adjoint()).eval();
    acc /= acc.trace().real();
    return DensityOperator::from_trusted(std::move(acc));
}

/// True iff the trace distance between E(ρ) and ρ is at most `tol`.
inline bool channel_fixed_point_check(const DensityOperator& rho, const TwirlChannel& ch, double tol) {
    return trace_distance(ch.apply(rho), rho) <= tol;
}

}  // namespace framefree
