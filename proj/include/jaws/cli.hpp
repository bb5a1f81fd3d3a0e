// Copyright 2026 The jaws Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace jaws::cli {

enum ExitCode : int { ok = 0, validation_error = 1, budget_refused = 2 };

struct RunConfig {
    std::string subcommand;
    std::vector<std::string> models;
    std::uint64_t seed = 1;
    std::size_t samples = 10000;
    std::string out_dir = ".";
    std::size_t grid = 512;
    double threshold_variance_exponent = 4.0;
    double threshold_cumulant = 1e-3;
    double budget = 1e10;
};

/// Runs one subcommand; args exclude the program name. Reports go to out,
/// diagnostics to err, CSV tables into config.out_dir.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

int cmd_analyze(const RunConfig &cfg, std::ostream &out);
int cmd_sample(const RunConfig &cfg, std::ostream &out);
int cmd_simulate(const RunConfig &cfg, std::ostream &out);
int cmd_minima(const RunConfig &cfg, std::ostream &out);
int cmd_trainability(const RunConfig &cfg, std::ostream &out);

} // namespace jaws::cli
