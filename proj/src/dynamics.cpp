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

#include "qdyn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>

namespace qdyn {

namespace {

// Below this the entanglement indicator is treated as zero.
constexpr double kIndicatorFloor = 1e-13;

std::vector<CorrelationReport> evaluate_row(const DensityMatrix &rho_ab, const SweepConfig &config, double p,
                                            const OptimizerSettings &settings) {
    std::vector<CorrelationReport> out;
    out.reserve(config.partitions.size());
    try {
        const auto global = evolve_global(rho_ab, config.channel, p);
        for (auto part : config.partitions)
            out.push_back(evaluate_report(extract_bipartition(global, part), config.measures, settings));
    } catch (const std::exception &e) {
        std::ostringstream os;
        os << "at p = " << p << ": " << e.what();
        throw SweepError(p, os.str());
    }
    return out;
}

std::vector<Trajectory> assemble(const SweepConfig &config,
                                 const std::vector<std::vector<CorrelationReport>> &rows) {
    std::vector<Trajectory> out;
    for (std::size_t k = 0; k < config.partitions.size(); ++k) {
        Trajectory t{config.partitions[k], {}};
        t.rows.reserve(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) t.rows.push_back({config.p_grid[i], rows[i][k]});
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

DensityMatrix build_initial_state(const InitialState &initial, const Tolerances &tol) {
    return std::visit(
        [&tol](const auto &params) -> DensityMatrix {
            using T = std::decay_t<decltype(params)>;
            if constexpr (std::is_same_v<T, BellDiagonalParams>)
                return bell_diagonal_state(params, tol);
            else
                return general_two_qubit_state(params, tol);
        },
        initial);
}

DensityMatrix evolve_global(const DensityMatrix &rho_ab, ChannelKind kind, double p) {
    const auto ch = make_channel(kind, p);
    return dilate_and_evolve_global(rho_ab, ch, ch);
}

DensityMatrix extract_bipartition(const DensityMatrix &global, BipartitionLabel part) {
    if (global.dims() != std::vector<std::size_t>{2, 2, 2, 2}) {
        throw SubsystemError("extract_bipartition: four-qubit (A, B, E_A, E_B) state required");
    }
    const auto keep = subsystems_of(part);
    return partial_trace(global, keep);
}

std::vector<double> uniform_p_grid(std::size_t n) {
    if (n == 0) throw std::invalid_argument("uniform_p_grid: at least one point required");
    if (n == 1) return {0.0};
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) grid[i] = static_cast<double>(i) / static_cast<double>(n - 1);
    return grid;
}

void validate_config(const SweepConfig &config) {
    if (config.p_grid.empty()) throw std::invalid_argument("sweep: p grid is empty");
    for (std::size_t i = 0; i < config.p_grid.size(); ++i) {
        const double p = config.p_grid[i];
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sweep: p values must lie in [0, 1]");
        if (i > 0 && !(p > config.p_grid[i - 1]))
            throw std::invalid_argument("sweep: p grid must be strictly increasing");
    }
    if (config.partitions.empty()) throw std::invalid_argument("sweep: no partitions requested");
    if (config.measures.empty()) throw std::invalid_argument("sweep: no measures requested");
}

std::vector<Trajectory> sweep_serial(const SweepConfig &config) {
    validate_config(config);
    const auto rho_ab = build_initial_state(config.initial, config.tolerances);
    auto settings = config.optimizer;
    settings.parallel = false;

    std::vector<std::vector<CorrelationReport>> rows;
    rows.reserve(config.p_grid.size());
    for (double p : config.p_grid) rows.push_back(evaluate_row(rho_ab, config, p, settings));
    return assemble(config, rows);
}

std::vector<Trajectory> sweep(const SweepConfig &config) {
    validate_config(config);
    const auto rho_ab = build_initial_state(config.initial, config.tolerances);
    auto settings = config.optimizer;
    settings.parallel = false;

    const auto n = static_cast<std::ptrdiff_t>(config.p_grid.size());
    std::vector<std::vector<CorrelationReport>> rows(config.p_grid.size());
    std::vector<std::exception_ptr> errors(config.p_grid.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            rows[i] = evaluate_row(rho_ab, config, config.p_grid[i], settings);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    // Report the failure at the smallest p, as the serial sweep would.
    for (const auto &e : errors)
        if (e) std::rethrow_exception(e);
    return assemble(config, rows);
}

double entanglement_indicator(const DensityMatrix &rho_ab) {
    if (is_x_form(rho_ab.matrix())) {
        const auto [l1, l2] = x_state_lambdas(rho_ab.matrix());
        return std::max(l1, l2);
    }
    return concurrence_general(rho_ab);
}

std::optional<double> find_transition(ChannelKind kind, const InitialState &initial, BipartitionLabel part,
                                      TransitionDirection direction, const TransitionOptions &opts) {
    if (opts.scan_points < 2) throw std::invalid_argument("find_transition: scan needs at least 2 points");
    const auto rho_ab = build_initial_state(initial);
    auto entangled = [&](double p) {
        return entanglement_indicator(extract_bipartition(evolve_global(rho_ab, kind, p), part)) >
               kIndicatorFloor;
    };
    // Death: entangled before, separable after. Birth: the reverse.
    const bool before = direction == TransitionDirection::Death;

    const auto grid = uniform_p_grid(static_cast<std::size_t>(opts.scan_points));
    bool prev = entangled(grid[0]);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const bool cur = entangled(grid[i]);
        if (prev == before && cur != before) {
            double lo = grid[i - 1], hi = grid[i];
            while (hi - lo > opts.interval) {
                const double mid = 0.5 * (lo + hi);
                (entangled(mid) == before ? lo : hi) = mid;
            }
            const double root = 0.5 * (lo + hi);
            if (root <= opts.endpoint || root >= 1.0 - opts.endpoint) return std::nullopt;
            return root;
        }
        prev = cur;
    }
    return std::nullopt;
}

OperationalMeasures operational_measures(const DensityMatrix &rho_ab, ChannelKind kind) {
    const auto ch = make_channel(kind, 1.0);
    const double classical = mutual_information(apply_local_channels(rho_ab, ch, ch));
    const double total = mutual_information(rho_ab);
    return {total - classical, classical};
}

}  // namespace qdyn
