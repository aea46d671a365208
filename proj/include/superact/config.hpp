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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace superact {

enum class Command { Demo, Sweep, Entropy, PptCheck, Q1 };

std::string command_name(Command c);

/// Resolved run configuration. Precedence: command-line flags over config
/// file values over defaults.
struct RunConfig {
    Command command = Command::Demo;
    std::vector<long> d_values = {2};
    std::vector<double> p_values = {0.5};
    std::uint64_t seed = 42;
    int restarts = 8;
    int max_iters = 200;
    std::string output_path;  // empty: stdout only
    std::string format = "json";
    std::string state = "classical";     // entropy / ppt-check target
    std::string channel = "erasure";     // q1 target
    std::vector<std::string> split = {"B"};  // ppt-check cut
};

/// Parse argv-style arguments (without the program name). A config file
/// may be named with --config or passed directly; its format is one
/// `key = value` per line, lists comma-separated, `#` comments. Unknown
/// flags or keys, type mismatches, and out-of-range values all throw
/// std::invalid_argument naming the offending field.
RunConfig parse_config(const std::vector<std::string>& args,
                       const std::optional<std::string>& file = std::nullopt);

}  // namespace superact
