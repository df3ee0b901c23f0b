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

// JSON views of library results. Kept apart from the numeric headers so the
// core library does not depend on a JSON package.

#include <cstddef>
#include <vector>

#include "json.hpp"

#include "framefree/irrep/coupling.hpp"
#include "framefree/optics/optics.hpp"
#include "framefree/protocols/rates.hpp"
#include "framefree/protocols/runs.hpp"

namespace framefree {

using Json = nlohmann::ordered_json;

/// {n, j2: [...], multiplicity: [...], total}, j descending.
inline Json multiplicity_table_json(std::size_t n) {
    Json j2 = Json::array();
    Json mult = Json::array();
    for (const auto& row : multiplicity_table(n)) {
        j2.push_back(row.j.twice());
        mult.push_back(row.multiplicity);
    }
    return Json{{"n", n}, {"j2", std::move(j2)}, {"multiplicity", std::move(mult)}, {"total", total_irrep_count(n)}};
}

inline Json to_json_value(const RateRow& r) {
    return Json{{"n", r.n},
                {"total_irreps", r.total_irreps},
                {"j2_max", r.j_max.twice()},
                {"j_max_multiplicity", r.j_max_multiplicity},
                {"dephasing_dim", r.dephasing_dim},
                {"classical_rate", r.classical_rate},
                {"quantum_rate", r.quantum_rate},
                {"dephasing_rate", r.dephasing_rate},
                {"asymptotic_gap", r.asymptotic_gap}};
}

inline Json to_json_value(const std::vector<RateRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) out.push_back(to_json_value(r));
    return out;
}

inline Json to_json_value(const ProtocolReport& r) {
    auto opt = [](const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); };
    return Json{{"protocol", r.protocol},
                {"n", r.n},
                {"trials", r.trials},
                {"errors", r.errors},
                {"min_fidelity", opt(r.min_fidelity)},
                {"mean_fidelity", opt(r.mean_fidelity)},
                {"chsh_value", opt(r.chsh_value)},
                {"rate_rows", to_json_value(r.rate_rows)}};
}

inline Json to_json_value(const optics::DetectionDistribution& d) {
    return Json{{"p_coincidence", d.p_coincidence}, {"p_bunch_port1", d.p_bunch_port1}, {"p_bunch_port2", d.p_bunch_port2}};
}

inline Json to_json_value(const optics::OpticalRunResult& r) {
    return Json{{"bit", r.bit},
                {"trials", r.trials},
                {"counts", {{"coincidence", r.counts.coincidence}, {"bunch1", r.counts.bunch1}, {"bunch2", r.counts.bunch2}}},
                {"error_rate", r.error_rate}};
}

}  // namespace framefree
