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

#include <iostream>

#include "superact/report.hpp"

namespace {

void usage(std::ostream& out) {
    out << "usage: superact <command> [flags]\n"
           "\n"
           "commands:\n"
           "  demo        canonical d=2, p=0.5 superactivation run plus checks\n"
           "  sweep       protocol over a d x p grid      --d 2,3 --p 0,0.5,1\n"
           "  entropy     von Neumann entropy of a state  --state bell0\n"
           "  ppt-check   partial-transpose test          --state classical --split B\n"
           "  q1          coherent-information search     --channel erasure --p 0.5 --d 2\n"
           "\n"
           "flags: --d LIST --p LIST --seed N --restarts N --max-iters N\n"
           "       --format json|csv --out PATH --state NAME --split LIST\n"
           "       --channel NAME --config FILE\n"
           "states: bell0 bell1 classical mixture flagged\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (!args.empty() && (args[0] == "-h" || args[0] == "--help" || args[0] == "help")) {
        usage(std::cout);
        return 0;
    }
    try {
        superact::RunConfig cfg = superact::parse_config(args);
        return superact::run_command(cfg, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
