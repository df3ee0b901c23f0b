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
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "framefree/core/group_element.hpp"
#include "framefree/core/metrics.hpp"
#include "framefree/core/random_source.hpp"
#include "framefree/core/states.hpp"
#include "framefree/irrep/decomposition.hpp"

namespace framefree {

/// Largest qubit count for which classical codebooks are built.
inline constexpr std::size_t kMaxCodebookQubits = 10;

struct Message {
    std::size_t index;
    bool operator==(const Message&) const = default;
};

/// How messages are assigned to irrep blocks.
enum class MessageOrder {
    canonical,    // block order of the decomposition: j descending
    j_ascending,  // smallest j first; for n = 2 the singlet carries message 0
};

struct CodeBookEntry {
    Message message;
    StateVector codeword;
    BlockLabel label;
};

/// One codeword per irrep block: the highest-weight state |j, m = j, r⟩.
class CodeBook {
public:
    CodeBook(std::shared_ptr<const IrrepDecomposition> d, MessageOrder order) : decomposition_(std::move(d)) {
        std::vector<std::size_t> block_order(decomposition_->block_count());
        for (std::size_t i = 0; i < block_order.size(); ++i) block_order[i] = i;
        if (order == MessageOrder::j_ascending) {
            std::stable_sort(block_order.begin(), block_order.end(), [&](std::size_t a, std::size_t b) {
                return decomposition_->blocks()[a].j < decomposition_->blocks()[b].j;
            });
        }
        for (std::size_t k = 0; k < block_order.size(); ++k) {
            const IrrepBlock& b = decomposition_->blocks()[block_order[k]];
            entries_.push_back(CodeBookEntry{Message{k}, StateVector(b.isometry.col(0)), BlockLabel{b.j, b.r}});
            block_index_.push_back(block_order[k]);
        }
    }

    std::size_t n() const { return decomposition_->n(); }
    std::size_t size() const { return entries_.size(); }
    const std::vector<CodeBookEntry>& entries() const { return entries_; }
    const CodeBookEntry& entry(Message m) const {
        if (m.index >= entries_.size()) {
            throw std::invalid_argument("CodeBook: message " + std::to_string(m.index) + " out of range [0, " +
                                        std::to_string(entries_.size()) + ")");
        }
        return entries_[m.index];
    }
    const IrrepDecomposition& decomposition() const { return *decomposition_; }

    /// Isometry of the block that carries message `k`.
    const Matrix& block_isometry(std::size_t k) const { return decomposition_->blocks()[block_index_.at(k)].isometry; }

private:
    std::shared_ptr<const IrrepDecomposition> decomposition_;
    std::vector<CodeBookEntry> entries_;
    std::vector<std::size_t> block_index_;
};

inline CodeBook build_classical_codebook(std::size_t n, MessageOrder order = MessageOrder::canonical) {
    if (n < 1 || n > kMaxCodebookQubits) {
        throw std::invalid_argument("build_classical_codebook: qubit count " + std::to_string(n) + " outside [1, " +
                                    std::to_string(kMaxCodebookQubits) + "]");
    }
    return CodeBook(std::make_shared<const IrrepDecomposition>(decompose(n)), order);
}

/// Outcome probabilities of the block measurement {Π_{j,r}}, indexed by message.
inline std::vector<double> pvm_outcome_probabilities(const StateVector& psi, const CodeBook& cb) {
    if (psi.dim() != cb.decomposition().dim()) throw std::invalid_argument("pvm_outcome_probabilities: dimension mismatch");
    std::vector<double> p(cb.size());
    for (std::size_t k = 0; k < cb.size(); ++k) p[k] = (cb.block_isometry(k).adjoint() * psi.amplitudes()).squaredNorm();
    return p;
}

/// Draws an index from a discrete distribution with one uniform variate.
inline std::size_t sample_outcome(const std::vector<double>& probabilities, RandomSource& rng) {
    const double u = rng.uniform();
    double cumulative = 0.0;
    for (std::size_t k = 0; k < probabilities.size(); ++k) {
        cumulative += probabilities[k];
        if (u < cumulative) return k;
    }
    // Round-off left the total just under 1: fall back to the likeliest outcome.
    return static_cast<std::size_t>(std::max_element(probabilities.begin(), probabilities.end()) - probabilities.begin());
}

/// Sends `msg` through an unknown collective rotation `g` and decodes it with
/// the block measurement.
inline Message classical_round_trip(Message msg, const CodeBook& cb, const GroupElement& g, RandomSource& rng) {
    const StateVector received = apply_collective_rotation(g, cb.n(), cb.entry(msg).codeword);
    return Message{sample_outcome(pvm_outcome_probabilities(received, cb), rng)};
}

/// Optimal success probability for discriminating two equiprobable states.
inline double helstrom_success_probability(const DensityOperator& rho0, const DensityOperator& rho1) {
    if (rho0.dim() != rho1.dim()) throw std::invalid_argument("helstrom_success_probability: dimension mismatch");
    return 0.5 + 0.5 * trace_distance(rho0, rho1);
}

}  // namespace framefree
