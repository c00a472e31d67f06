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

#include "qdyn/verify.hpp"

#include <algorithm>
#include <random>

#include "qdyn/dynamics.hpp"

namespace qdyn {

std::vector<OracleCheck> run_oracle_suite(const OracleSuiteOptions &opts) {
    std::mt19937_64 rng(opts.seed);
    std::vector<BellDiagonalParams> draws(static_cast<std::size_t>(opts.draws));
    for (auto &d : draws) d = sample_bell_diagonal(rng);
    const auto grid = uniform_p_grid(static_cast<std::size_t>(opts.p_points));

    std::vector<OracleCheck> out;
    for (ChannelKind kind : kAllChannels) {
        if (opts.only && *opts.only != kind) continue;
        std::vector<double> worst(kAllBipartitions.size(), 0.0);
        for (const auto &c : draws) {
            const auto rho_ab = bell_diagonal_state(c);
            for (double p : grid) {
                const auto global = evolve_global(rho_ab, kind, p);
                for (std::size_t k = 0; k < kAllBipartitions.size(); ++k) {
                    const auto part = kAllBipartitions[k];
                    CMatrix expected = closed_form_reduced(kind, part, c, p).matrix();
                    if (opts.fault && opts.fault->kind == kind && opts.fault->part == part) {
                        expected(0, 3) = -expected(0, 3);
                        expected(3, 0) = -expected(3, 0);
                    }
                    const double dev = max_abs_diff(expected, extract_bipartition(global, part).matrix());
                    worst[k] = std::max(worst[k], dev);
                }
            }
        }
        for (std::size_t k = 0; k < kAllBipartitions.size(); ++k)
            out.push_back({kind, kAllBipartitions[k], worst[k], worst[k] <= opts.tolerance});
    }
    return out;
}

}  // namespace qdyn
