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
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "framefree/core/linalg.hpp"
#include "framefree/irrep/clebsch_gordan.hpp"
#include "framefree/irrep/coupling.hpp"
#include "framefree/irrep/half_integer.hpp"

namespace framefree {

/// Largest qubit count for which explicit isometries are built.
inline constexpr std::size_t kMaxDecomposeQubits = 12;

/// One carrier space H_{j,r}. Columns of `isometry` are |j, m, r⟩ for
/// m = j, j − 1, …, −j.
struct IrrepBlock {
    HalfInteger j;
    CouplingPath path;
    std::size_t r;  // position of `path` among the paths ending at j
    Matrix isometry;

    std::size_t irrep_dim() const { return static_cast<std::size_t>(j.irrep_dim()); }
};

struct BlockLabel {
    HalfInteger j;
    std::size_t r;
    bool operator==(const BlockLabel&) const = default;
};

/// Column index of |j, m⟩ inside a block isometry.
inline std::size_t carrier_index(HalfInteger j, HalfInteger m) {
    return static_cast<std::size_t>((j.twice() - m.twice()) / 2);
}

/// Direct-sum decomposition of the collective SU(2) action on n qubits,
/// built by coupling qubits 1, 2, …, N left to right with Clebsch–Gordan
/// coefficients. Qubit basis |0⟩ = spin up (m = +½), |1⟩ = spin down.
/// Blocks are ordered by j descending, then by path step order.
class IrrepDecomposition {
public:
    explicit IrrepDecomposition(std::size_t n) : n_(n) {
        if (n < 1 || n > kMaxDecomposeQubits) {
            throw std::invalid_argument("decompose: qubit count " + std::to_string(n) + " outside [1, " +
                                        std::to_string(kMaxDecomposeQubits) + "]");
        }
        table_ = framefree::multiplicity_table(n);
        Matrix root(2, 2);
        root.setIdentity();  // |½, +½⟩ = |0⟩, |½, −½⟩ = |1⟩
        std::vector<HalfInteger> prefix{HalfInteger::half()};
        extend(prefix, root);

        std::stable_sort(blocks_.begin(), blocks_.end(),
                         [](const IrrepBlock& a, const IrrepBlock& b) { return a.j > b.j; });
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            blocks_[i].r = (i > 0 && blocks_[i - 1].j == blocks_[i].j) ? blocks_[i - 1].r + 1 : 0;
        }
    }

    std::size_t n() const { return n_; }
    std::size_t dim() const { return std::size_t{1} << n_; }
    const std::vector<IrrepBlock>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }
    const std::vector<MultiplicityRow>& multiplicity_table() const { return table_; }

    Count multiplicity_of(HalfInteger j) const {
        for (const auto& row : table_) {
            if (row.j == j) return row.multiplicity;
        }
        return 0;
    }

    /// Index into blocks() of label (j, r); throws for an unknown label.
    std::size_t index_of(HalfInteger j, std::size_t r) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (blocks_[i].j == j && blocks_[i].r == r) return i;
        }
        throw std::invalid_argument("IrrepDecomposition: no block (j = " + j.str() + ", r = " + std::to_string(r) +
                                    ") for n = " + std::to_string(n_));
    }

    const IrrepBlock& block(HalfInteger j, std::size_t r) const { return blocks_[index_of(j, r)]; }

    /// All block isometries side by side: the 2^n × 2^n coupling unitary.
    Matrix coupling_matrix() const {
        Matrix out(static_cast<Eigen::Index>(dim()), static_cast<Eigen::Index>(dim()));
        Eigen::Index col = 0;
        for (const auto& b : blocks_) {
            out.middleCols(col, b.isometry.cols()) = b.isometry;
            col += b.isometry.cols();
        }
        return out;
    }

    /// Isometry onto the whole spin-j sector, columns ordered as the product
    /// (carrier, multiplicity): column = carrier_index · c_j + r.
    Matrix sector_isometry(HalfInteger j) const {
        const auto c = static_cast<Eigen::Index>(multiplicity_of(j));
        if (c == 0) throw std::invalid_argument("sector_isometry: j = " + j.str() + " does not occur");
        const Eigen::Index d = j.irrep_dim();
        Matrix out(static_cast<Eigen::Index>(dim()), d * c);
        for (const auto& b : blocks_) {
            if (b.j != j) continue;
            for (Eigen::Index m = 0; m < d; ++m) out.col(m * c + static_cast<Eigen::Index>(b.r)) = b.isometry.col(m);
        }
        return out;
    }

private:
    // Depth-first over coupling paths; `states` holds |j_k, m⟩ for the
    // current prefix as columns m = j_k … −j_k.
    void extend(std::vector<HalfInteger>& prefix, const Matrix& states) {
        if (prefix.size() == n_) {
            blocks_.push_back(IrrepBlock{prefix.back(), CouplingPath(prefix), 0, states});
            return;
        }
        const HalfInteger j = prefix.back();
        for (int step : {+1, -1}) {
            const HalfInteger next = HalfInteger::from_twice(j.twice() + step);
            if (next.is_negative()) continue;
            prefix.push_back(next);
            extend(prefix, couple_qubit(j, next, states));
            prefix.pop_back();
        }
    }

    // |j', m'⟩ = Σ_{m_s} ⟨j, m' − m_s; ½, m_s | j', m'⟩ |j, m' − m_s⟩ ⊗ |m_s⟩,
    // with the new qubit appended as the least significant factor.
    static Matrix couple_qubit(HalfInteger j, HalfInteger next, const Matrix& states) {
        const Eigen::Index old_dim = states.rows();
        Matrix out = Matrix::Zero(2 * old_dim, next.irrep_dim());
        const HalfInteger half = HalfInteger::half();
        for (Eigen::Index col = 0; col < next.irrep_dim(); ++col) {
            const HalfInteger m = HalfInteger::from_twice(next.twice() - 2 * static_cast<int>(col));
            for (int bit : {0, 1}) {
                const HalfInteger ms = bit == 0 ? half : -half;
                const HalfInteger m1 = m - ms;
                if (m1.abs() > j) continue;
                const double coef = clebsch_gordan(j, m1, half, ms, next, m);
                if (coef == 0.0) continue;
                const auto src = static_cast<Eigen::Index>(carrier_index(j, m1));
                for (Eigen::Index i = 0; i < old_dim; ++i) out(2 * i + bit, col) += coef * states(i, src);
            }
        }
        return out;
    }

    std::size_t n_;
    std::vector<IrrepBlock> blocks_;
    std::vector<MultiplicityRow> table_;
};

inline IrrepDecomposition decompose(std::size_t n) { return IrrepDecomposition(n); }

/// Π_{j,r} = V V† for the block's isometry V.
inline Matrix block_projector(const IrrepDecomposition& d, HalfInteger j, std::size_t r) {
    const Matrix& v = d.block(j, r).isometry;
    return v * v.adjoint();
}

/// Projector onto the full spin-j sector (all multiplicity copies).
inline Matrix sector_projector(const IrrepDecomposition& d, HalfInteger j) {
    const Matrix v = d.sector_isometry(j);
    return v * v.adjoint();
}

}  // namespace framefree
