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

#ifndef QDYN_OPTIMIZE_HPP
#define QDYN_OPTIMIZE_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace qdyn {

/// Best sample of an exhaustive grid scan. Ties resolve to the smallest
/// index, so callers order their grids by tie-break priority.
struct GridArgmax {
    std::size_t index = 0;
    double value = 0.0;
};

using IndexObjective = std::function<double(std::size_t)>;

/// Reference scan, one sample at a time in index order.
GridArgmax grid_argmax_serial(std::size_t count, const IndexObjective &f);

/// OpenMP scan over the same samples. Each thread keeps a local best and
/// the reduction applies the same (value, then smaller index) rule, so the
/// result is bit-identical to grid_argmax_serial.
GridArgmax grid_argmax_parallel(std::size_t count, const IndexObjective &f);

struct SimplexOptions {
    int max_iterations = 200;
    double ftol = 1e-8;  // spread of objective values over the simplex
    double xtol = 1e-6;  // largest vertex offset from the best vertex
};

struct SimplexResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
};

using VectorObjective = std::function<double(const std::vector<double> &)>;

/// Nelder-Mead maximization from `start`, with the initial simplex spanned
/// by `start + step[i] e_i`. Deterministic; never returns a point worse
/// than `start`.
SimplexResult nelder_mead_maximize(const VectorObjective &f, std::vector<double> start,
                                   const std::vector<double> &step, const SimplexOptions &opts = {});

}  // namespace qdyn

#endif  // QDYN_OPTIMIZE_HPP
