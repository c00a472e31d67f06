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

#ifndef QDYN_DYNAMICS_HPP
#define QDYN_DYNAMICS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qdyn/channels.hpp"
#include "qdyn/measures.hpp"
#include "qdyn/oracles.hpp"
#include "qdyn/states.hpp"

namespace qdyn {

using InitialState = std::variant<BellDiagonalParams, GeneralTwoQubitParams>;

DensityMatrix build_initial_state(const InitialState &initial, const Tolerances &tol = {});

/// Evolve the initial state with the same channel on both qubits and return
/// the four-party (A, B, E_A, E_B) state.
DensityMatrix evolve_global(const DensityMatrix &rho_ab, ChannelKind kind, double p);

/// Two-party marginal of a four-party state; factor order follows the label.
DensityMatrix extract_bipartition(const DensityMatrix &global, BipartitionLabel part);

struct SweepConfig {
    ChannelKind channel = ChannelKind::AmplitudeDamping;
    InitialState initial = BellDiagonalParams{};
    std::vector<double> p_grid;
    std::vector<BipartitionLabel> partitions;
    MeasureSet measures = MeasureSet::all();
    OptimizerSettings optimizer{};
    Tolerances tolerances{};  // applied to the initial state
};

/// n uniformly spaced points on [0, 1]; a single point is p = 0.
std::vector<double> uniform_p_grid(std::size_t n = 101);

/// Throws std::invalid_argument for a malformed config.
void validate_config(const SweepConfig &config);

struct TrajectoryRow {
    double p;
    CorrelationReport report;
};

struct Trajectory {
    BipartitionLabel partition;
    std::vector<TrajectoryRow> rows;
};

/// A construction or validation failure at a particular p.
class SweepError : public std::runtime_error {
   public:
    SweepError(double p, const std::string &what) : std::runtime_error(what), p_(p) {}
    double p() const { return p_; }

   private:
    double p_;
};

/// One trajectory per requested partition, rows in p order. Rows are
/// evaluated in parallel; output is identical to sweep_serial.
std::vector<Trajectory> sweep(const SweepConfig &config);
std::vector<Trajectory> sweep_serial(const SweepConfig &config);

enum class TransitionDirection { Death, Birth };

struct TransitionOptions {
    int scan_points = 1001;
    double interval = 1e-12;  // final bisection bracket width
    double endpoint = 1e-8;   // roots this close to 0 or 1 count as none
};

/// Entanglement sudden death (last p below which the partition is
/// entangled) or sudden birth (first p above which it is). Transitions
/// that only touch p = 0 or p = 1 are reported as none.
std::optional<double> find_transition(ChannelKind kind, const InitialState &initial, BipartitionLabel part,
                                      TransitionDirection direction, const TransitionOptions &opts = {});

/// Signed entanglement indicator used by find_transition: max(Lambda1,
/// Lambda2) for X states, otherwise the Wootters concurrence.
double entanglement_indicator(const DensityMatrix &rho_ab);

struct OperationalMeasures {
    double quantum;    // I(rho) - I(eps(rho))
    double classical;  // I(eps(rho)) at p = 1
};

OperationalMeasures operational_measures(const DensityMatrix &rho_ab, ChannelKind kind);

}  // namespace qdyn

#endif  // QDYN_DYNAMICS_HPP
