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

#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>

#include "framefree/core/group_element.hpp"
#include "framefree/core/linalg.hpp"
#include "framefree/core/random_source.hpp"
#include "framefree/core/states.hpp"

namespace framefree::optics {

/// Four optical modes: spatial mode s ∈ {1, 2} times polarization.
enum class Polarization { H = 0, V = 1 };

inline constexpr std::size_t kModes = 4;
inline constexpr std::size_t kFockDim = 10;  // unordered pairs of 4 modes, with repetition

inline constexpr std::size_t mode_index(int spatial, Polarization p) {
    return 2 * static_cast<std::size_t>(spatial - 1) + static_cast<std::size_t>(p);
}

inline constexpr int spatial_of(std::size_t mode) { return static_cast<int>(mode / 2) + 1; }

/// Two photons in four modes.
///
/// Stored as a symmetric 4×4 tensor T with ‖T‖_F = 1, the state being
/// (1/√2) Σ_ab T_ab a†_a a†_b |0⟩. A mode transformation a†_b → Σ_a M_ab a†_a
/// acts as T → M T Mᵀ. Fock amplitudes are √2·T_ab for a < b and T_aa for a
/// doubly occupied mode.
class OpticalState {
public:
    /// Fock basis element k ↔ mode pair (a, b), a ≤ b, in lexicographic order.
    static std::pair<std::size_t, std::size_t> fock_modes(std::size_t k) {
        for (std::size_t a = 0, idx = 0; a < kModes; ++a)
            for (std::size_t b = a; b < kModes; ++b, ++idx)
                if (idx == k) return {a, b};
        throw std::out_of_range("OpticalState::fock_modes: index " + std::to_string(k) + " out of range");
    }

    static std::size_t fock_index(std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        if (b >= kModes) throw std::out_of_range("OpticalState::fock_index: mode out of range");
        return a * kModes - a * (a - 1) / 2 + (b - a);
    }

    static OpticalState from_fock_amplitudes(const Vector& c) {
        if (c.size() != static_cast<Eigen::Index>(kFockDim)) {
            throw std::invalid_argument("OpticalState: expected " + std::to_string(kFockDim) + " Fock amplitudes");
        }
        if (!all_finite(c) || std::abs(c.norm() - 1.0) > kStateTolerance) {
            throw std::invalid_argument("OpticalState: amplitudes must be finite with unit norm");
        }
        Matrix t = Matrix::Zero(kModes, kModes);
        for (std::size_t k = 0; k < kFockDim; ++k) {
            const auto [a, b] = fock_modes(k);
            const auto ia = static_cast<Eigen::Index>(a);
            const auto ib = static_cast<Eigen::Index>(b);
            if (a == b) {
                t(ia, ia) = c[static_cast<Eigen::Index>(k)];
            } else {
                t(ia, ib) = c[static_cast<Eigen::Index>(k)] / std::sqrt(2.0);
                t(ib, ia) = t(ia, ib);
            }
        }
        return OpticalState(std::move(t));
    }

    /// Dual-rail embedding of a two-qubit state: qubit k is the polarization
    /// of the photon in spatial mode k, |0⟩ ↔ H and |1⟩ ↔ V.
    static OpticalState from_two_qubit(const StateVector& psi) {
        if (psi.dim() != 4) throw std::invalid_argument("OpticalState::from_two_qubit: expected a two-qubit state");
        Vector c = Vector::Zero(kFockDim);
        for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q)
                c[static_cast<Eigen::Index>(fock_index(mode_index(1, Polarization(p)), mode_index(2, Polarization(q))))] =
                    psi[static_cast<std::size_t>(2 * p + q)];
        return from_fock_amplitudes(c);
    }

    const Matrix& tensor() const { return t_; }

    Vector fock_amplitudes() const {
        Vector c(kFockDim);
        for (std::size_t k = 0; k < kFockDim; ++k) {
            const auto [a, b] = fock_modes(k);
            const cplx tab = t_(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
            c[static_cast<Eigen::Index>(k)] = a == b ? tab : std::sqrt(2.0) * tab;
        }
        return c;
    }

    double norm() const { return t_.norm(); }
    cplx inner(const OpticalState& other) const { return (t_.conjugate().cwiseProduct(other.t_)).sum(); }

    /// Applies the single-photon mode unitary `m` (4×4).
    OpticalState transformed(const Matrix& m) const {
        if (m.rows() != static_cast<Eigen::Index>(kModes) || m.cols() != static_cast<Eigen::Index>(kModes)) {
            throw std::invalid_argument("OpticalState::transformed: mode matrix must be 4x4");
        }
        if (unitarity_residual(m) > kStateTolerance) throw std::invalid_argument("OpticalState::transformed: mode matrix is not unitary");
        return OpticalState(m * t_ * m.transpose());
    }

private:
    explicit OpticalState(Matrix t) : t_(std::move(t)) {}
    Matrix t_;
};

enum class BellState { psi_minus, phi_minus };

inline const char* to_string(BellState b) { return b == BellState::psi_minus ? "psi_minus" : "phi_minus"; }

/// |Ψ⁻⟩ = (|H⟩₁|V⟩₂ − |V⟩₁|H⟩₂)/√2 or |Φ⁻⟩ = (|H⟩₁|H⟩₂ − |V⟩₁|V⟩₂)/√2.
inline OpticalState prepare_bell(BellState which) {
    const double h = 1.0 / std::sqrt(2.0);
    Vector psi(4);
    if (which == BellState::psi_minus) {
        psi << 0, h, -h, 0;
    } else {
        psi << h, 0, 0, -h;
    }
    return OpticalState::from_two_qubit(StateVector(psi));
}

/// Applies g to the polarization of every listed spatial mode:
/// a†_{s,H} → g₀₀ a†_{s,H} + g₁₀ a†_{s,V}, a†_{s,V} → g₀₁ a†_{s,H} + g₁₁ a†_{s,V}.
inline OpticalState polarization_rotation(const OpticalState& s, const GroupElement& g, std::initializer_list<int> spatial_modes) {
    Matrix m = Matrix::Identity(kModes, kModes);
    for (int sp : spatial_modes) {
        if (sp != 1 && sp != 2) throw std::invalid_argument("polarization_rotation: spatial mode must be 1 or 2");
        const auto base = static_cast<Eigen::Index>(mode_index(sp, Polarization::H));
        m.block(base, base, 2, 2) = g.matrix();
    }
    return s.transformed(m);
}

/// The 90° polarization rotation used to turn |Ψ⁻⟩ into |Φ⁻⟩: a half turn
/// of the Bloch sphere about x, −iσ_x.
inline GroupElement ninety_degree_rotation() { return GroupElement::rotation(std::acos(-1.0), 1.0, 0.0, 0.0); }

/// Mode matrix of a 50/50 beam splitter with a_{1,p} → (a_{1,p} + a_{2,p})/√2
/// and a_{2,p} → (a_{1,p} − a_{2,p})/√2.
inline Matrix beam_splitter_matrix() {
    const double h = 1.0 / std::sqrt(2.0);
    Matrix m = Matrix::Zero(kModes, kModes);
    for (std::size_t p = 0; p < 2; ++p) {
        const auto i1 = static_cast<Eigen::Index>(p);
        const auto i2 = static_cast<Eigen::Index>(2 + p);
        m(i1, i1) = h;
        m(i2, i1) = h;
        m(i1, i2) = h;
        m(i2, i2) = -h;
    }
    return m;
}

inline OpticalState beam_splitter(const OpticalState& s) { return s.transformed(beam_splitter_matrix()); }

struct DetectionDistribution {
    double p_coincidence;
    double p_bunch_port1;
    double p_bunch_port2;
};

/// Polarization-insensitive, number-resolving detectors on both output ports.
inline DetectionDistribution detect(const OpticalState& s) {
    const Vector c = s.fock_amplitudes();
    DetectionDistribution d{0.0, 0.0, 0.0};
    for (std::size_t k = 0; k < kFockDim; ++k) {
        const auto [a, b] = OpticalState::fock_modes(k);
        const double p = std::norm(c[static_cast<Eigen::Index>(k)]);
        if (spatial_of(a) != spatial_of(b)) {
            d.p_coincidence += p;
        } else if (spatial_of(a) == 1) {
            d.p_bunch_port1 += p;
        } else {
            d.p_bunch_port2 += p;
        }
    }
    return d;
}

struct OpticalCounts {
    std::size_t coincidence = 0;
    std::size_t bunch1 = 0;
    std::size_t bunch2 = 0;
};

struct OpticalRunResult {
    int bit;
    std::size_t trials;
    OpticalCounts counts;
    double error_rate;
};

/// Sends `bit` as |Ψ⁻⟩ (0) or |Φ⁻⟩ (1) through a fiber that rotates both
/// polarizations by g_fiber, then decodes coincidence as 0 and bunching as 1.
inline OpticalRunResult run_optical_protocol(int bit, const GroupElement& g_fiber, std::size_t trials, RandomSource& rng) {
    if (bit != 0 && bit != 1) throw std::invalid_argument("run_optical_protocol: bit must be 0 or 1");
    if (trials < 1) throw std::invalid_argument("run_optical_protocol: trials must be at least 1");
    const OpticalState sent = prepare_bell(bit == 0 ? BellState::psi_minus : BellState::phi_minus);
    const DetectionDistribution d = detect(beam_splitter(polarization_rotation(sent, g_fiber, {1, 2})));
    OpticalRunResult result{bit, trials, {}, 0.0};
    std::size_t errors = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const double u = rng.uniform();
        int decoded = 1;
        if (u < d.p_coincidence) {
            ++result.counts.coincidence;
            decoded = 0;
        } else if (u < d.p_coincidence + d.p_bunch_port1) {
            ++result.counts.bunch1;
        } else {
            ++result.counts.bunch2;
        }
        if (decoded != bit) ++errors;
    }
    result.error_rate = static_cast<double>(errors) / static_cast<double>(trials);
    return result;
}

}  // namespace framefree::optics
