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
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "framefree/comm_protocols.hpp"
#include "framefree/irrep_decomposition.hpp"
#include "framefree/optics_sim.hpp"
#include "framefree/quantum_core.hpp"
#include "framefree/serialize.hpp"
#include "framefree/twirl/twirl_channel.hpp"

namespace framefree::cli {

enum class Command { decompose, rates, twirl_check, classical, quantum, optics, bell };
enum class OutputFormat { json, csv };

inline const char* to_string(Command c) {
    switch (c) {
        case Command::decompose: return "decompose";
        case Command::rates: return "rates";
        case Command::twirl_check: return "twirl-check";
        case Command::classical: return "classical";
        case Command::quantum: return "quantum";
        case Command::optics: return "optics";
        case Command::bell: return "bell";
    }
    return "unknown";
}

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    Command command = Command::decompose;
    std::optional<std::size_t> n;
    std::size_t max_n = 64;
    std::size_t trials = 1000;
    std::uint64_t seed = 42;
    double tolerance = 1e-9;
    OutputFormat output = OutputFormat::json;
    std::optional<std::string> out_file;
    bool j_ascending = false;
};

/// Raised by parse_args; carries the exit code and the text to print.
struct UsageError : std::runtime_error {
    UsageError(int code, const std::string& text) : std::runtime_error(text), exit_code(code) {}
    int exit_code;
};

struct Verdict {
    std::string name;
    double residual;
    double tolerance;
    bool pass;
};

struct Report {
    Command command;
    Json config;
    Json payload;
    std::vector<Verdict> verdicts;
    double duration_ms = 0.0;

    bool passed() const {
        return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
    }
};

inline Verdict make_verdict(std::string name, double residual, double tolerance) {
    return {std::move(name), residual, tolerance, residual <= tolerance};
}

/// Parses `args` (without the program name).
inline RunConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{"Communication without a shared reference frame: decompositions, channels and protocols", "framefree"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string output = "json";
    std::size_t n = 0;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--trials", cfg.trials, "Number of trials")->check(CLI::Range(std::size_t{1}, std::size_t{10000000}));
        sub->add_option("--seed", cfg.seed, "Random seed");
        sub->add_option("--tolerance", cfg.tolerance, "Verdict tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--output", output, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out-file", cfg.out_file, "Write the report here instead of stdout");
    };
    auto with_n = [&](CLI::App* sub, std::size_t lo, std::size_t hi) {
        sub->add_option("--n", n, "Number of qubits")->check(CLI::Range(lo, hi));
    };

    struct Entry {
        Command command;
        CLI::App* app;
    };
    std::vector<Entry> subs;
    auto add = [&](Command c, const char* help) {
        CLI::App* s = app.add_subcommand(to_string(c), help);
        common(s);
        subs.push_back({c, s});
        return s;
    };
    with_n(add(Command::decompose, "Irrep multiplicity table and block checks"), 1, 64);
    add(Command::rates, "Rate table")->add_option("--max-n", cfg.max_n, "Largest n")->check(CLI::Range(1, 64));
    with_n(add(Command::twirl_check, "Fixed-point and idempotence residuals of the collective twirl"), 1, 8);
    CLI::App* classical = add(Command::classical, "Classical messages through random frame rotations");
    with_n(classical, 1, 10);
    classical->add_flag("--j-ascending", cfg.j_ascending, "Assign messages by ascending j (singlet is message 0 for n = 2)");
    with_n(add(Command::quantum, "Decode fidelity of DFS, noiseless subsystem and dephasing codes"), 2, 10);
    add(Command::optics, "Two-photon polarization protocol");
    add(Command::bell, "Logical CHSH test between two DFS blocks");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out;
        const int code = app.exit(e, out, out);
        throw UsageError(code == 0 ? kExitPass : kExitUsage, out.str());
    }
    for (const auto& s : subs) {
        if (s.app->parsed()) {
            cfg.command = s.command;
            const CLI::Option* opt = s.app->get_option_no_throw("--n");
            if (opt != nullptr && opt->count() > 0) cfg.n = n;
        }
    }
    cfg.output = output == "csv" ? OutputFormat::csv : OutputFormat::json;
    return cfg;
}

inline Json config_json(const RunConfig& cfg) {
    Json j{{"command", to_string(cfg.command)}};
    j["n"] = cfg.n ? Json(*cfg.n) : Json(nullptr);
    if (cfg.command == Command::rates) j["max_n"] = cfg.max_n;
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
    j["tolerance"] = cfg.tolerance;
    j["output"] = cfg.output == OutputFormat::csv ? "csv" : "json";
    if (cfg.command == Command::classical) j["j_ascending"] = cfg.j_ascending;
    return j;
}

namespace detail {

inline void run_decompose(const RunConfig& cfg, Report& r) {
    const std::size_t n = cfg.n.value_or(4);
    r.payload = multiplicity_table_json(n);
    long double dim_sum = 0;
    for (const auto& row : multiplicity_table(n)) dim_sum += static_cast<long double>(row.j.irrep_dim()) * row.multiplicity;
    const double dim_residual = static_cast<double>(std::fabs(dim_sum - std::ldexp(1.0L, static_cast<int>(n))));
    r.payload["dimension_sum_residual"] = dim_residual;
    r.verdicts.push_back(make_verdict("dimension_sum", dim_residual, 0.0));
    if (n <= 10) {
        const IrrepDecomposition d = decompose(n);
        const Matrix u = d.coupling_matrix();
        const double unitarity = unitarity_residual(u);
        r.payload["block_count"] = d.block_count();
        r.payload["coupling_unitarity_residual"] = unitarity;
        r.verdicts.push_back(make_verdict("coupling_unitarity", unitarity, cfg.tolerance));
    }
}

inline void run_rates(const RunConfig& cfg, Report& r) {
    const ProtocolReport rep = run_rate_table(cfg.max_n);
    r.payload = Json{{"rows", to_json_value(rep.rate_rows)}};
    double range_violation = 0.0;
    for (const auto& row : rep.rate_rows) {
        for (double x : {row.classical_rate, row.quantum_rate, row.dephasing_rate}) {
            range_violation = std::max({range_violation, -x, x - 1.0});
        }
    }
    r.verdicts.push_back(make_verdict("rates_in_unit_interval", range_violation, 0.0));
    double trend_violation = 0.0;
    std::optional<double> prev;
    for (std::size_t n = 8; n <= cfg.max_n; n *= 2) {
        const double gap = rep.rate_rows[n - 1].asymptotic_gap;
        trend_violation = std::max(trend_violation, -gap);
        if (prev) trend_violation = std::max(trend_violation, gap - *prev);
        prev = gap;
    }
    if (prev) r.verdicts.push_back(make_verdict("gap_positive_decreasing", trend_violation, 0.0));
}

inline void run_twirl_check(const RunConfig& cfg, Report& r, RandomSource& rng) {
    const std::size_t n = cfg.n.value_or(3);
    const TwirlChannel ch = TwirlChannel::full_su2(n);
    const std::size_t dim = ch.dim();
    double idem = 0.0;
    double trace = 0.0;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        Matrix g(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
        for (Eigen::Index i = 0; i < g.size(); ++i) g.data()[i] = cplx(rng.normal(), rng.normal());
        Matrix m = g * g.adjoint();
        m /= m.trace().real();
        const DensityOperator rho = DensityOperator::from_trusted(m);
        const DensityOperator once = ch.apply(rho);
        idem = std::max(idem, trace_distance(ch.apply(once), once));
        trace = std::max(trace, std::abs(once.matrix().trace().real() - 1.0));
    }
    double fixed = 0.0;
    if (n % 2 == 0) {
        for (std::size_t k = 0; k < ch.decomposition().multiplicity_of(HalfInteger{}); ++k) {
            const DensityOperator s = DensityOperator::pure(StateVector(ch.decomposition().block(HalfInteger{}, k).isometry.col(0)));
            fixed = std::max(fixed, trace_distance(ch.apply(s), s));
        }
    } else {
        const DensityOperator mixed = DensityOperator::maximally_mixed(dim);
        fixed = trace_distance(ch.apply(mixed), mixed);
    }
    r.payload = Json{{"n", n},
                     {"samples", cfg.trials},
                     {"fixed_point_states", n % 2 == 0 ? "j0_blocks" : "maximally_mixed"},
                     {"max_idempotence_residual", idem},
                     {"max_trace_residual", trace},
                     {"max_fixed_point_residual", fixed}};
    r.verdicts.push_back(make_verdict("idempotence", idem, cfg.tolerance));
    r.verdicts.push_back(make_verdict("trace_preservation", trace, cfg.tolerance));
    r.verdicts.push_back(make_verdict("fixed_points", fixed, cfg.tolerance));
}

inline void run_classical(const RunConfig& cfg, Report& r, RandomSource& rng) {
    const std::size_t n = cfg.n.value_or(4);
    const ProtocolReport rep =
        run_classical_protocol(n, cfg.trials, rng, cfg.j_ascending ? MessageOrder::j_ascending : MessageOrder::canonical);
    r.payload = to_json_value(rep);
    r.payload["messages"] = build_classical_codebook(n).size();
    r.verdicts.push_back(make_verdict("decoding_errors", static_cast<double>(rep.errors), 0.0));
}

inline void run_quantum(const RunConfig& cfg, Report& r, RandomSource& rng) {
    std::vector<LogicalEncoding> codes;
    if (cfg.n) {
        const std::size_t n = *cfg.n;
        if (n % 2 == 0 && n >= 4) codes.push_back(dfs_encoding(n));
        if (n >= 3) codes.push_back(noiseless_subsystem_plan(n));
        codes.push_back(dephasing_encoding(n));
    } else {
        codes.push_back(dfs_encoding(4));
        codes.push_back(noiseless_subsystem_plan(3));
        codes.push_back(dephasing_encoding(2));
    }
    Json runs = Json::array();
    for (std::size_t k = 0; k < codes.size(); ++k) {
        RandomSource sub = rng.split(k);
        const ProtocolReport rep = run_quantum_protocol(codes[k], cfg.trials, sub, cfg.tolerance);
        Json j = to_json_value(rep);
        j["logical_dim"] = codes[k].logical_dim;
        runs.push_back(std::move(j));
        r.verdicts.push_back(make_verdict(rep.protocol + "_n" + std::to_string(rep.n) + "_min_fidelity",
                                          1.0 - *rep.min_fidelity, cfg.tolerance));
    }
    r.payload = Json{{"runs", std::move(runs)}};
}

inline void run_optics(const RunConfig& cfg, Report& r, RandomSource& rng) {
    Json runs = Json::array();
    for (int bit : {0, 1}) {
        RandomSource sub = rng.split(static_cast<std::uint64_t>(bit));
        const GroupElement fiber = haar_random_su2(sub);
        const optics::OpticalState sent =
            optics::prepare_bell(bit == 0 ? optics::BellState::psi_minus : optics::BellState::phi_minus);
        const optics::DetectionDistribution d =
            optics::detect(optics::beam_splitter(optics::polarization_rotation(sent, fiber, {1, 2})));
        const optics::OpticalRunResult res = optics::run_optical_protocol(bit, fiber, cfg.trials, sub);
        Json j = to_json_value(res);
        j["distribution"] = to_json_value(d);
        runs.push_back(std::move(j));
        const double expected = bit == 0 ? 1.0 : 0.0;
        r.verdicts.push_back(make_verdict("coincidence_bit" + std::to_string(bit), std::abs(d.p_coincidence - expected),
                                          cfg.tolerance));
        r.verdicts.push_back(make_verdict("error_rate_bit" + std::to_string(bit), res.error_rate, 0.0));
    }
    r.payload = Json{{"runs", std::move(runs)}};
}

inline void run_bell(const RunConfig& cfg, Report& r, RandomSource& rng) {
    const ProtocolReport rep = run_bell_protocol(cfg.trials, rng, cfg.tolerance);
    r.payload = to_json_value(rep);
    r.payload["tsirelson_bound"] = 2.0 * std::sqrt(2.0);
    r.verdicts.push_back(make_verdict("chsh_mean", std::abs(*rep.chsh_value - 2.0 * std::sqrt(2.0)), cfg.tolerance));
    r.verdicts.push_back(make_verdict("trials_off_bound", static_cast<double>(rep.errors), 0.0));
}

}  // namespace detail

inline Report run_command(const RunConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    Report r{cfg.command, config_json(cfg), Json::object(), {}, 0.0};
    RandomSource rng(cfg.seed);
    switch (cfg.command) {
        case Command::decompose: detail::run_decompose(cfg, r); break;
        case Command::rates: detail::run_rates(cfg, r); break;
        case Command::twirl_check: detail::run_twirl_check(cfg, r, rng); break;
        case Command::classical: detail::run_classical(cfg, r, rng); break;
        case Command::quantum: detail::run_quantum(cfg, r, rng); break;
        case Command::optics: detail::run_optics(cfg, r, rng); break;
        case Command::bell: detail::run_bell(cfg, r, rng); break;
    }
    r.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline Json report_json(const Report& r) {
    Json verdicts = Json::array();
    for (const auto& v : r.verdicts) {
        verdicts.push_back(Json{{"name", v.name}, {"residual", v.residual}, {"tolerance", v.tolerance}, {"pass", v.pass}});
    }
    return Json{{"command", to_string(r.command)},
                {"config", r.config},
                {"payload", r.payload},
                {"verdicts", std::move(verdicts)},
                {"pass", r.passed()},
                {"duration_ms", r.duration_ms}};
}

namespace detail {

inline std::string format_number(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

inline std::string format_number(std::uint64_t x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

}  // namespace detail

/// Serializes a report. CSV carries the rate table for `rates`, the
/// multiplicity table for `decompose`, and the verdicts otherwise.
inline std::string emit_report(const Report& r, const RunConfig& cfg) {
    if (cfg.output == OutputFormat::json) return report_json(r).dump(2) + "\n";
    using detail::format_number;
    std::string out;
    if (r.command == Command::rates) {
        out = "n,classical_rate,quantum_rate,dephasing_rate,asymptotic_gap\n";
        for (const auto& row : r.payload.at("rows")) {
            out += format_number(row.at("n").get<std::uint64_t>()) + "," +
                   format_number(row.at("classical_rate").get<double>()) + "," +
                   format_number(row.at("quantum_rate").get<double>()) + "," +
                   format_number(row.at("dephasing_rate").get<double>()) + "," +
                   format_number(row.at("asymptotic_gap").get<double>()) + "\n";
        }
    } else if (r.command == Command::decompose) {
        out = "j2,multiplicity\n";
        const Json& j2 = r.payload.at("j2");
        const Json& mult = r.payload.at("multiplicity");
        for (std::size_t k = 0; k < j2.size(); ++k) {
            out += format_number(j2[k].get<std::uint64_t>()) + "," + format_number(mult[k].get<std::uint64_t>()) + "\n";
        }
    } else {
        out = "name,residual,tolerance,pass\n";
        for (const auto& v : r.verdicts) {
            out += v.name + "," + format_number(v.residual) + "," + format_number(v.tolerance) + "," + (v.pass ? "1" : "0") + "\n";
        }
    }
    return out;
}

/// Full driver: parse, run, write. Returns the process exit code.
inline int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    try {
        cfg = parse_args(args);
    } catch (const UsageError& e) {
        (e.exit_code == kExitPass ? out : err) << e.what();
        return e.exit_code;
    }
    Report report;
    try {
        report = run_command(cfg);
    } catch (const std::exception& e) {
        err << Json{{"command", to_string(cfg.command)}, {"config", config_json(cfg)}, {"error", e.what()}}.dump(2) << "\n";
        return kExitFail;
    }
    const std::string text = emit_report(report, cfg);
    if (cfg.out_file) {
        std::ofstream f(*cfg.out_file, std::ios::binary);
        if (!f || !(f << text) || !f.flush()) {
            err << "framefree: cannot write report to " << *cfg.out_file << "\n";
            return kExitFail;
        }
    } else {
        out << text;
    }
    return report.passed() ? kExitPass : kExitFail;
}

}  // namespace framefree::cli
