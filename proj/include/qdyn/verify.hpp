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

#ifndef QDYN_VERIFY_HPP
#define QDYN_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qdyn/channels.hpp"
#include "qdyn/oracles.hpp"

namespace qdyn {

/// Test hook: flips the sign of the (0, 3) / (3, 0) coherence of one
/// closed-form cell before comparison.
struct OracleFault {
    ChannelKind kind;
    BipartitionLabel part;
};

struct OracleSuiteOptions {
    std::optional<ChannelKind> only;  // restrict to one channel
    int draws = 10;                   // random Bell-diagonal states per cell
    int p_points = 11;                // uniform grid on [0, 1]
    std::uint64_t seed = 20100614;
    double tolerance = 1e-12;
    std::optional<OracleFault> fault;
};

struct OracleCheck {
    ChannelKind kind;
    BipartitionLabel part;
    double max_deviation;
    bool pass;
};

/// Compares every closed-form reduced state with the dilated-and-traced
/// numerical state, cell by cell.
std::vector<OracleCheck> run_oracle_suite(const OracleSuiteOptions &opts = {});

}  // namespace qdyn

#endif  // QDYN_VERIFY_HPP
