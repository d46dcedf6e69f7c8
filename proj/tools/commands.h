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


#ifndef BBSHOT_TOOLS_COMMANDS_H
#define BBSHOT_TOOLS_COMMANDS_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "bbshot/decode.h"
#include "bbshot/simkit.h"
#include "bbshot/spec_file.h"

namespace bbshot {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInvariant = 1,
    kExitUsage = 2,
};

/// Experiment description read from a key=value file. Paths to code specs
/// are resolved relative to the experiment file.
struct ExperimentSpec {
    std::string origin;
    std::string kind;
    std::string name;
    std::vector<std::string> code_paths;
    std::vector<double> p;
    std::vector<double> q;
    bool q_equals_p = false;
    std::vector<uint32_t> rounds{1};
    std::optional<DecoderKind> syndrome_decoder;
    std::optional<DecoderKind> data_decoder;
    std::optional<uint64_t> max_trials;
    std::optional<uint64_t> min_failures;
    std::optional<uint64_t> seed;
    std::optional<std::string> out;
    bool soft_vote = true;
    Sector sector = Sector::X;
    unsigned osd_window = 12;
    uint32_t max_iter = 100;
    std::optional<uint32_t> syndrome_radius;
    uint32_t data_radius = 1;
    bool sweep = true;
    uint32_t max_rounds_checked = 7;
    uint32_t upper_trials = 2000;
};

/// A file with an `N` key is a single code spec; anything else is read as
/// an experiment spec.
ExperimentSpec load_experiment_spec(const std::string &path);
ExperimentSpec parse_experiment_spec(const KeyValueFile &file, const std::string &base_dir);

struct CliOptions {
    std::string command;
    std::string spec_path;
    std::optional<uint64_t> seed;
    std::optional<std::string> out;
    unsigned workers = 1;
    std::optional<uint64_t> max_trials;
    std::optional<uint64_t> min_failures;
    std::optional<std::string> decoder;
    std::optional<std::string> syndrome_decoder;
    /// Debug: flip H_X[row][col] after construction.
    std::optional<std::pair<size_t, size_t>> tamper_hx;
};

/// Runs one command; never throws. Returns an ExitCode.
int run_command(const CliOptions &opts, std::ostream &out, std::ostream &err);

}  // namespace bbshot

#endif
