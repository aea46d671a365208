// Copyright 2026 The superactivation-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "superact/report.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace superact {

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_cell(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number()) return fmt17(v.get<double>());
    return v.dump();
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void print_row(std::ostream& out, const std::string& name, double value, bool ok) {
    out << "  " << std::left << std::setw(34) << name << std::right << std::setw(12)
        << std::fixed << std::setprecision(6) << value << "  " << (ok ? "ok" : "FAIL")
        << "\n";
    out.unsetf(std::ios::fixed);
}

}  // namespace

nlohmann::json config_to_json(const RunConfig& cfg) {
    return {{"command", command_name(cfg.command)},
            {"d", cfg.d_values},
            {"p", cfg.p_values},
            {"seed", cfg.seed},
            {"restarts", cfg.restarts},
            {"max_iters", cfg.max_iters},
            {"out", cfg.output_path},
            {"format", cfg.format},
            {"state", cfg.state},
            {"channel", cfg.channel},
            {"split", cfg.split}};
}

nlohmann::json ExperimentRecord::to_json() const {
    return {{"config", config},
            {"records", records},
            {"version", version},
            {"all_checks_passed", all_checks_passed}};
}

ExperimentRecord ExperimentRecord::from_json(const nlohmann::json& j) {
    ExperimentRecord rec;
    rec.config = j.at("config");
    rec.records = j.at("records").get<std::vector<nlohmann::json>>();
    rec.version = j.at("version").get<std::string>();
    rec.all_checks_passed = j.at("all_checks_passed").get<bool>();
    return rec;
}

std::string ExperimentRecord::to_csv() const {
    std::ostringstream out;
    if (records.empty()) return "";
    std::vector<std::string> columns;
    for (auto it = records.front().begin(); it != records.front().end(); ++it)
        columns.push_back(it.key());
    for (std::size_t i = 0; i < columns.size(); ++i)
        out << (i ? "," : "") << columns[i];
    out << "\n";
    for (const auto& rec : records) {
        for (std::size_t i = 0; i < columns.size(); ++i)
            out << (i ? "," : "") << csv_cell(rec.at(columns[i]));
        out << "\n";
    }
    return out.str();
}

DensityMatrix named_state(const std::string& name, Eigen::Index d) {
    SystemLayout ab{{"A", 2}, {"B", 2}};
    if (name == "bell0") return DensityMatrix(bell(0).projector(), ab);
    if (name == "bell1") return DensityMatrix(bell(1).projector(), ab);
    if (name == "classical") return classically_correlated();
    if (name == "mixture")
        return DensityMatrix(0.75 * bell(0).projector() + 0.25 * bell(1).projector(), ab);
    if (name == "flagged") return flagged_bell(d);
    throw std::invalid_argument(
        "state: unknown name '" + name +
        "' (known: bell0, bell1, classical, mixture, flagged)");
}

ExperimentRecord cmd_demo(const RunConfig& cfg, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    ExperimentRecord rec;
    rec.config = config_to_json(cfg);

    const ProtocolReport run = run_protocol(2, 0.5);
    const double ic_expected = 1.0 - binary_entropy(0.25);
    const Q1Result q1 =
        q1_search(erasure_channel(0.5, 2), cfg.restarts, cfg.max_iters, cfg.seed);
    const double classical_ic =
        coherent_information_state(classically_correlated(), {"B"}).i_c;

    const bool ok_fid = std::abs(run.fidelity_psi0 - 0.75) <= 1e-10;
    const bool ok_ic = std::abs(run.i_c - ic_expected) <= 1e-9;
    const bool ok_q1 = q1.best_ic <= 1e-6;
    const bool ok_flags = std::abs(run.ppt_bound_flags - (0.5 + 1.0 / 2.0)) <= 1e-9;
    const bool ok_classical = std::abs(classical_ic) <= 1e-9;

    out << "superactivation demo (d = 2, erasure p = 0.5)\n";
    print_row(out, "fidelity with psi0", run.fidelity_psi0, ok_fid);
    print_row(out, "coherent information [bits]", run.i_c, ok_ic);
    print_row(out, "erasure Q1 lower bound", q1.best_ic, ok_q1);
    print_row(out, "flag PPT distinguishability", run.ppt_bound_flags, ok_flags);
    print_row(out, "classical marginal I_c", classical_ic, ok_classical);

    rec.all_checks_passed = ok_fid && ok_ic && ok_q1 && ok_flags && ok_classical;
    rec.records.push_back({{"d", 2},
                           {"p", 0.5},
                           {"fidelity_psi0", run.fidelity_psi0},
                           {"i_c", run.i_c},
                           {"branch_success", run.branch_success},
                           {"branch_erased", run.branch_erased},
                           {"ppt_bound_flags", run.ppt_bound_flags},
                           {"erasure_q1", q1.best_ic},
                           {"classical_ic", classical_ic},
                           {"seed", cfg.seed},
                           {"passed", rec.all_checks_passed},
                           {"wall_ms", elapsed_ms(t0)}});
    out << (rec.all_checks_passed ? "all checks passed\n" : "CHECKS FAILED\n");
    return rec;
}

ExperimentRecord cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    if (cfg.d_values.empty() || cfg.p_values.empty())
        throw std::invalid_argument("empty sweep axis");
    ExperimentRecord rec;
    rec.config = config_to_json(cfg);
    for (long d : cfg.d_values) {
        for (double p : cfg.p_values) {
            const auto t0 = std::chrono::steady_clock::now();
            ProtocolReport r;
            try {
                r = run_protocol(d, p);
            } catch (const std::exception& e) {
                std::ostringstream msg;
                msg << "sweep cell (d=" << d << ", p=" << p << "): " << e.what();
                throw std::invalid_argument(msg.str());
            }
            rec.records.push_back({{"d", d},
                                   {"p", p},
                                   {"fidelity_psi0", r.fidelity_psi0},
                                   {"i_c", r.i_c},
                                   {"branch_success", r.branch_success},
                                   {"branch_erased", r.branch_erased},
                                   {"ppt_bound_flags", r.ppt_bound_flags},
                                   {"seed", cfg.seed},
                                   {"wall_ms", elapsed_ms(t0)}});
        }
    }
    out << "sweep: " << rec.records.size() << " cells (d x p = " << cfg.d_values.size()
        << " x " << cfg.p_values.size() << ")\n";
    return rec;
}

ExperimentRecord cmd_entropy(const RunConfig& cfg, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    ExperimentRecord rec;
    rec.config = config_to_json(cfg);
    const DensityMatrix rho = named_state(cfg.state, cfg.d_values.front());
    const EntropyReport er = von_neumann_entropy(rho);
    out << "entropy(" << cfg.state << ") = " << std::setprecision(6) << std::fixed
        << er.entropy_bits << " bits\n";
    out.unsetf(std::ios::fixed);
    rec.records.push_back({{"state", cfg.state},
                           {"d", cfg.d_values.front()},
                           {"entropy_bits", er.entropy_bits},
                           {"spectrum", er.spectrum},
                           {"clipped_mass", er.clipped_mass},
                           {"seed", cfg.seed},
                           {"wall_ms", elapsed_ms(t0)}});
    return rec;
}

ExperimentRecord cmd_ppt_check(const RunConfig& cfg, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    ExperimentRecord rec;
    rec.config = config_to_json(cfg);
    const DensityMatrix rho = named_state(cfg.state, cfg.d_values.front());
    const PptResult res = is_ppt(rho, cfg.split);
    out << "ppt-check(" << cfg.state << ", split {";
    for (std::size_t i = 0; i < cfg.split.size(); ++i) out << (i ? "," : "") << cfg.split[i];
    out << "}): " << (res.is_ppt ? "PPT" : "NPT") << ", min eigenvalue "
        << std::setprecision(6) << std::fixed << res.min_eigenvalue << "\n";
    out.unsetf(std::ios::fixed);
    rec.records.push_back({{"state", cfg.state},
                           {"d", cfg.d_values.front()},
                           {"split", cfg.split},
                           {"is_ppt", res.is_ppt},
                           {"min_eigenvalue", res.min_eigenvalue},
                           {"seed", cfg.seed},
                           {"wall_ms", elapsed_ms(t0)}});
    return rec;
}

ExperimentRecord cmd_q1(const RunConfig& cfg, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    if (cfg.channel != "erasure" && cfg.channel != "identity")
        throw std::invalid_argument("channel: unknown name '" + cfg.channel +
                                    "' (known: erasure, identity)");
    const Eigen::Index d = cfg.d_values.front();
    const double p = cfg.p_values.front();
    const KrausChannel ch =
        cfg.channel == "erasure" ? erasure_channel(p, d) : identity_channel(d);
    const Q1Result res = q1_search(ch, cfg.restarts, cfg.max_iters, cfg.seed);
    out << "q1(" << cfg.channel << ", d=" << d << ", p=" << p
        << "): best coherent information " << std::setprecision(6) << std::fixed
        << res.best_ic << " bits\n";
    out.unsetf(std::ios::fixed);
    ExperimentRecord rec;
    rec.config = config_to_json(cfg);
    rec.records.push_back({{"channel", cfg.channel},
                           {"d", d},
                           {"p", p},
                           {"best_ic", res.best_ic},
                           {"restarts", cfg.restarts},
                           {"iterations", res.iterate_trace.size()},
                           {"seed", cfg.seed},
                           {"wall_ms", elapsed_ms(t0)}});
    return rec;
}

int run_command(const RunConfig& cfg, std::ostream& out) {
    ExperimentRecord rec;
    switch (cfg.command) {
        case Command::Demo: rec = cmd_demo(cfg, out); break;
        case Command::Sweep: rec = cmd_sweep(cfg, out); break;
        case Command::Entropy: rec = cmd_entropy(cfg, out); break;
        case Command::PptCheck: rec = cmd_ppt_check(cfg, out); break;
        case Command::Q1: rec = cmd_q1(cfg, out); break;
    }
    if (!cfg.output_path.empty()) {
        std::ofstream file(cfg.output_path);
        if (!file) throw std::runtime_error("cannot write output file: " + cfg.output_path);
        if (cfg.format == "csv")
            file << rec.to_csv();
        else
            file << rec.to_json().dump(2) << "\n";
    }
    return rec.all_checks_passed ? 0 : 1;
}

}  // namespace superact
