// Copyright 2026 The qdyn Authors
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

#ifndef QDYN_TOOLS_CLI_HPP
#define QDYN_TOOLS_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdyn/dynamics.hpp"

namespace qdyn::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,  // bad flags or invalid config
    kInvalidState = 2,
    kOracleMismatch = 3,
};

class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct SweepJob {
    SweepConfig config;
    std::filesystem::path out_dir;
};

/// Parses a sweep config document. Optimizer settings and tolerances are
/// left at their defaults; the command line overrides them.
SweepJob parse_sweep_config(const nlohmann::json &doc);

/// Twelve significant digits; NaN for measures that were not requested.
std::string format_number(double v);

std::string csv_header();
std::string trajectory_csv(const Trajectory &t);

/// Writes `contents` next to `path` and renames it into place.
void write_atomically(const std::filesystem::path &path, const std::string &contents);

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qdyn::cli

#endif  // QDYN_TOOLS_CLI_HPP
