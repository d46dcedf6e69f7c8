// Copyright 2026 The bbshot Authors
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


#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.h"

int main(int argc, char **argv) {
    CLI::App app{"bbshot: coprime bivariate bicycle codes and single-shot decoding"};
    app.require_subcommand(1, 1);

    bbshot::CliOptions opts;
    std::string tamper;

    auto add_common = [&](CLI::App *sub, bool sim) {
        sub->add_option("--spec", opts.spec_path, "Code or experiment spec file")->required();
        sub->add_option("--out", opts.out, "Output CSV path (stdout when omitted)");
        sub->add_option("--workers", opts.workers, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--seed", opts.seed, "Master seed (overrides the spec)");
        if (sim) {
            sub->add_option("--max-trials", opts.max_trials, "Trial cap per cell");
            sub->add_option("--min-failures", opts.min_failures, "Stop a cell after this many failures");
            sub->add_option("--decoder", opts.decoder, "Main decoder: bp, bp-osd0, bp-osd2, bd-lookup, majority");
            sub->add_option("--syndrome-decoder", opts.syndrome_decoder, "Syndrome-stage decoder");
        }
        sub->add_option("--tamper-hx", tamper, "Debug: flip H_X entry ROW,COL after construction");
    };

    struct Command {
        const char *name;
        const char *help;
        bool sim;
    };
    const Command commands[] = {
        {"construct", "Build codes and print their parameters", false},
        {"analyze", "Syndrome-code distance report", false},
        {"sim-syndrome", "Syndrome-code Monte Carlo with closed-form curves", true},
        {"sim-logical", "Logical error rate over a (p, q, R) grid", true},
        {"sim-rsweep", "Logical error rate as a function of rounds R", true},
        {"check-theorems", "Structural identities, distance bounds and exhaustive fault sweep", false},
    };
    for (const auto &c : commands) {
        CLI::App *sub = app.add_subcommand(c.name, c.help);
        add_common(sub, c.sim);
        sub->callback([&opts, name = std::string(c.name)]() { opts.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : bbshot::kExitUsage;
    }
    if (!tamper.empty()) {
        size_t comma = tamper.find(',');
        try {
            if (comma == std::string::npos) {
                throw std::invalid_argument(tamper);
            }
            opts.tamper_hx = {std::stoul(tamper.substr(0, comma)), std::stoul(tamper.substr(comma + 1))};
        } catch (const std::exception &) {
            std::cerr << "error: --tamper-hx expects ROW,COL\n";
            return bbshot::kExitUsage;
        }
    }
    return bbshot::run_command(opts, std::cout, std::cerr);
}
