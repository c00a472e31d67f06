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

#include "qdyn/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qdyn {

namespace {

bool better(const GridArgmax &a, const GridArgmax &b) {
    return a.value > b.value || (a.value == b.value && a.index < b.index);
}

}  // namespace

GridArgmax grid_argmax_serial(std::size_t count, const IndexObjective &f) {
    if (count == 0) throw std::invalid_argument("grid_argmax: empty grid");
    GridArgmax best{0, f(0)};
    for (std::size_t i = 1; i < count; ++i) {
        const double v = f(i);
        if (v > best.value) best = {i, v};
    }
    return best;
}

GridArgmax grid_argmax_parallel(std::size_t count, const IndexObjective &f) {
    if (count == 0) throw std::invalid_argument("grid_argmax: empty grid");
    GridArgmax best{count, -std::numeric_limits<double>::infinity()};
    const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel
    {
        GridArgmax local{count, -std::numeric_limits<double>::infinity()};
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const GridArgmax cand{static_cast<std::size_t>(i), f(static_cast<std::size_t>(i))};
            if (better(cand, local)) local = cand;
        }
#pragma omp critical(qdyn_grid_argmax)
        {
            if (better(local, best)) best = local;
        }
    }
    return best;
}

SimplexResult nelder_mead_maximize(const VectorObjective &f, std::vector<double> start,
                                   const std::vector<double> &step, const SimplexOptions &opts) {
    const std::size_t n = start.size();
    if (n == 0 || step.size() != n) throw std::invalid_argument("nelder_mead: bad dimensions");

    struct Vertex {
        std::vector<double> x;
        double f;
    };
    std::vector<Vertex> simplex;
    simplex.reserve(n + 1);
    simplex.push_back({start, f(start)});
    for (std::size_t i = 0; i < n; ++i) {
        auto x = start;
        x[i] += step[i];
        simplex.push_back({x, f(x)});
    }

    auto order = [&] {
        std::stable_sort(simplex.begin(), simplex.end(),
                         [](const Vertex &a, const Vertex &b) { return a.f > b.f; });
    };
    auto affine = [&](const std::vector<double> &c, const std::vector<double> &w, double t) {
        std::vector<double> r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = c[i] + t * (w[i] - c[i]);
        return r;
    };

    int it = 0;
    order();
    for (; it < opts.max_iterations; ++it) {
        const double spread = simplex.front().f - simplex.back().f;
        double size = 0.0;
        for (std::size_t v = 1; v <= n; ++v)
            for (std::size_t i = 0; i < n; ++i)
                size = std::max(size, std::abs(simplex[v].x[i] - simplex[0].x[i]));
        if (spread <= opts.ftol && size <= opts.xtol) break;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[v].x[i] / static_cast<double>(n);

        Vertex &worst = simplex.back();
        const auto xr = affine(centroid, worst.x, -1.0);
        const double fr = f(xr);
        if (fr > simplex.front().f) {
            const auto xe = affine(centroid, worst.x, -2.0);
            const double fe = f(xe);
            worst = fe > fr ? Vertex{xe, fe} : Vertex{xr, fr};
        } else if (fr > simplex[n - 1].f) {
            worst = {xr, fr};
        } else {
            const bool outside = fr > worst.f;
            const auto xc = affine(centroid, outside ? xr : worst.x, 0.5);
            const double fc = f(xc);
            if (fc >= (outside ? fr : worst.f)) {
                worst = {xc, fc};
            } else {
                for (std::size_t v = 1; v <= n; ++v) {
                    simplex[v].x = affine(simplex[0].x, simplex[v].x, 0.5);
                    simplex[v].f = f(simplex[v].x);
                }
            }
        }
        order();
    }
    return {simplex.front().x, simplex.front().f, it};
}

}  // namespace qdyn
