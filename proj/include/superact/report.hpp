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

#pragma once

#include <iosfwd>

#include <nlohmann/json.hpp>

#include "superact/config.hpp"
#include "superact/protocol.hpp"

namespace superact {

inline constexpr const char* kVersion = "0.1.0";

/// Machine-readable outcome of one CLI run: the resolved config, one flat
/// record per sweep cell (or one record for single-shot commands), and the
/// artifact version.
struct ExperimentRecord {
    nlohmann::json config;
    std::vector<nlohmann::json> records;
    std::string version = kVersion;
    bool all_checks_passed = true;

    nlohmann::json to_json() const;
    static ExperimentRecord from_json(const nlohmann::json& j);

    /// Header row plus one row per record; doubles printed with 17
    /// significant digits so binary64 values round-trip.
    std::string to_csv() const;
};

/// Named-state registry used by `entropy` and `ppt-check`:
/// bell0, bell1, classical, mixture, flagged (flagged uses d).
DensityMatrix named_state(const std::string& name, Eigen::Index d);

ExperimentRecord cmd_demo(const RunConfig& cfg, std::ostream& out);
ExperimentRecord cmd_sweep(const RunConfig& cfg, std::ostream& out);
ExperimentRecord cmd_entropy(const RunConfig& cfg, std::ostream& out);
ExperimentRecord cmd_ppt_check(const RunConfig& cfg, std::ostream& out);
ExperimentRecord cmd_q1(const RunConfig& cfg, std::ostream& out);

/// Dispatch on cfg.command, write the output file when requested, and
/// return the process exit status (0 iff all checks passed).
int run_command(const RunConfig& cfg, std::ostream& out);

nlohmann::json config_to_json(const RunConfig& cfg);

}  // namespace superact
