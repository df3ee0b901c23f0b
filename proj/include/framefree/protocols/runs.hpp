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
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "framefree/core/metrics.hpp"
#include "framefree/core/random_source.hpp"
#include "framefree/protocols/bell.hpp"
#include "framefree/protocols/classical.hpp"
#include "framefree/protocols/encoding.hpp"
#include "framefree/protocols/rates.hpp"
#include "framefree/twirl/twirl_channel.hpp"

namespace framefree {

/// Outcome of one simulated protocol run.
struct ProtocolReport {
    std::string protocol;
    std::size_t n = 0;
    std::size_t trials = 0;
    std::size_t errors = 0;
    std::optional<double> min_fidelity;
    std::optional<double> mean_fidelity;
    std::optional<double> chsh_value;
    std::vector<RateRow> rate_rows;
};

/// Haar-random pure state: normalized vector of complex Gaussians.
inline StateVector haar_random_state(std::size_t dim, RandomSource& rng) {
    Vector v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double re = rng.normal();
        v[i] = cplx(re, rng.normal());
    }
    return StateVector::normalized(v);
}

/// Sends uniformly chosen messages through independent Haar rotations.
inline ProtocolReport run_classical_protocol(std::size_t n, std::size_t trials, RandomSource& rng,
                                             MessageOrder order = MessageOrder::canonical) {
    const CodeBook cb = build_classical_codebook(n, order);
    ProtocolReport report{"classical", n, trials, 0, {}, {}, {}, {}};
    for (std::size_t t = 0; t < trials; ++t) {
        const auto k = std::min(cb.size() - 1, static_cast<std::size_t>(rng.uniform() * static_cast<double>(cb.size())));
        const GroupElement g = haar_random_su2(rng);
        if (classical_round_trip(Message{k}, cb, g, rng) != Message{k}) ++report.errors;
    }
    return report;
}

/// The channel a code is meant to survive: collective dephasing for an
/// m-sector code, the full collective twirl otherwise.
inline TwirlChannel protecting_channel(const LogicalEncoding& enc) {
    return enc.kind == EncodingKind::dephasing_m_sector ? TwirlChannel::u1_dephasing(enc.n) : TwirlChannel::full_su2(enc.n);
}

inline std::string protocol_name(const LogicalEncoding& enc) {
    switch (enc.kind) {
        case EncodingKind::dfs_j0: return "quantum_dfs";
        case EncodingKind::noiseless_subsystem: return "quantum_nss";
        case EncodingKind::dephasing_m_sector: return "quantum_dephasing";
    }
    return "quantum";
}

/// Encodes random logical states, applies the protecting channel, decodes,
/// and counts trials whose fidelity falls below 1 − tolerance.
inline ProtocolReport run_quantum_protocol(const LogicalEncoding& enc, std::size_t trials, RandomSource& rng,
                                           double tolerance) {
    if (trials < 1) throw std::invalid_argument("run_quantum_protocol: trials must be at least 1");
    const TwirlChannel channel = protecting_channel(enc);
    ProtocolReport report{protocol_name(enc), enc.n, trials, 0, {}, {}, {}, {}};
    double min_f = 1.0;
    double sum_f = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const StateVector psi = haar_random_state(enc.logical_dim, rng);
        const DensityOperator out = decode_logical(channel.apply(encode_logical(psi, enc)), enc);
        const double f = fidelity(out, psi);
        min_f = std::min(min_f, f);
        sum_f += f;
        if (f < 1.0 - tolerance) ++report.errors;
    }
    report.min_fidelity = min_f;
    report.mean_fidelity = sum_f / static_cast<double>(trials);
    return report;
}

/// CHSH test on logical Bell pairs; a trial is an error when its value
/// misses 2√2 by more than `tolerance`.
inline ProtocolReport run_bell_protocol(std::size_t trials, RandomSource& rng, double tolerance) {
    const std::vector<double> values = logical_bell_chsh_trials(rng, trials);
    ProtocolReport report{"bell", 4, trials, 0, {}, {}, {}, {}};
    const double target = 2.0 * std::sqrt(2.0);
    double sum = 0.0;
    for (double v : values) {
        sum += v;
        if (std::abs(v - target) > tolerance) ++report.errors;
    }
    report.chsh_value = sum / static_cast<double>(values.size());
    return report;
}

inline ProtocolReport run_rate_table(std::size_t n_max) {
    return ProtocolReport{"rates", n_max, 0, 0, {}, {}, {}, rate_table(n_max)};
}

}  // namespace framefree
