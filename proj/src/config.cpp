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

#include "superact/config.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace superact {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(trim(item));
    return out;
}

long parse_long(const std::string& key, const std::string& s) {
    std::size_t used = 0;
    long v;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(key + ": not an integer: '" + s + "'");
    }
    if (used != s.size()) throw std::invalid_argument(key + ": not an integer: '" + s + "'");
    return v;
}

double parse_double(const std::string& key, const std::string& s) {
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(key + ": not a number: '" + s + "'");
    }
    if (used != s.size()) throw std::invalid_argument(key + ": not a number: '" + s + "'");
    return v;
}

Command parse_command(const std::string& name) {
    if (name == "demo") return Command::Demo;
    if (name == "sweep") return Command::Sweep;
    if (name == "entropy") return Command::Entropy;
    if (name == "ppt-check") return Command::PptCheck;
    if (name == "q1") return Command::Q1;
    throw std::invalid_argument("unknown command: '" + name + "'");
}

// Applies one key/value pair onto the config; `where` names the source
// for error messages.
void apply_key(RunConfig& cfg, const std::string& key, const std::string& value,
               const std::string& where) {
    const std::string tag = where + " " + key;
    if (key == "command") {
        cfg.command = parse_command(value);
    } else if (key == "d") {
        cfg.d_values.clear();
        for (const auto& tok : split_commas(value)) cfg.d_values.push_back(parse_long(tag, tok));
    } else if (key == "p") {
        cfg.p_values.clear();
        for (const auto& tok : split_commas(value)) cfg.p_values.push_back(parse_double(tag, tok));
    } else if (key == "seed") {
        cfg.seed = static_cast<std::uint64_t>(parse_long(tag, value));
    } else if (key == "restarts") {
        cfg.restarts = static_cast<int>(parse_long(tag, value));
    } else if (key == "max-iters") {
        cfg.max_iters = static_cast<int>(parse_long(tag, value));
    } else if (key == "out") {
        cfg.output_path = value;
    } else if (key == "format") {
        cfg.format = value;
    } else if (key == "state") {
        cfg.state = value;
    } else if (key == "channel") {
        cfg.channel = value;
    } else if (key == "split") {
        cfg.split = split_commas(value);
    } else {
        throw std::invalid_argument(where + ": unknown key '" + key + "'");
    }
}

void apply_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config file not readable: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected 'key = value'");
        apply_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), "config file");
    }
}

void validate(const RunConfig& cfg) {
    for (long d : cfg.d_values)
        if (d < 2) throw std::invalid_argument("d_values: entries must be >= 2");
    for (double p : cfg.p_values)
        if (p < 0.0 || p > 1.0)
            throw std::invalid_argument("p_values: entries must be in [0,1]");
    if (cfg.restarts < 1) throw std::invalid_argument("restarts: must be >= 1");
    if (cfg.max_iters < 1) throw std::invalid_argument("max-iters: must be >= 1");
    if (cfg.format != "json" && cfg.format != "csv")
        throw std::invalid_argument("format: must be 'json' or 'csv'");
}

}  // namespace

std::string command_name(Command c) {
    switch (c) {
        case Command::Demo: return "demo";
        case Command::Sweep: return "sweep";
        case Command::Entropy: return "entropy";
        case Command::PptCheck: return "ppt-check";
        case Command::Q1: return "q1";
    }
    return "?";
}

RunConfig parse_config(const std::vector<std::string>& args,
                       const std::optional<std::string>& file) {
    // First pass: pull out the command, the flag map, and any --config
    // path, so the precedence flags > file > defaults can be applied.
    std::optional<std::string> command;
    std::optional<std::string> config_path;
    std::vector<std::pair<std::string, std::string>> flags;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a.rfind("--", 0) == 0) {
            const std::string key = a.substr(2);
            if (i + 1 >= args.size())
                throw std::invalid_argument("flag --" + key + " needs a value");
            const std::string value = args[++i];
            if (key == "config") {
                config_path = value;
            } else {
                flags.emplace_back(key, value);
            }
        } else if (!command) {
            command = a;
        } else {
            throw std::invalid_argument("unexpected positional argument: '" + a + "'");
        }
    }

    RunConfig cfg;
    if (file) apply_file(cfg, *file);
    if (config_path) apply_file(cfg, *config_path);
    if (command) cfg.command = parse_command(*command);
    for (const auto& [key, value] : flags) apply_key(cfg, key, value, "flag");
    validate(cfg);
    return cfg;
}

}  // namespace superact
