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

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "qdyn/dynamics.hpp"
#include "test_support.hpp"

namespace qdyn {
namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

void expect_identical(const CorrelationReport &a, const CorrelationReport &b) {
    EXPECT_TRUE(same_bits(a.mutual_info, b.mutual_info));
    EXPECT_TRUE(same_bits(a.classical_two_side, b.classical_two_side));
    EXPECT_TRUE(same_bits(a.quantum_two_side, b.quantum_two_side));
    EXPECT_TRUE(same_bits(a.discord_b_measured, b.discord_b_measured));
    EXPECT_TRUE(same_bits(a.classical_hv_b_measured, b.classical_hv_b_measured));
    EXPECT_TRUE(same_bits(a.concurrence, b.concurrence));
    EXPECT_TRUE(same_bits(a.negativity, b.negativity));
}

SweepConfig small_config() {
    SweepConfig config;
    config.channel = ChannelKind::AmplitudeDamping;
    config.initial = BellDiagonalParams{-0.5, -0.5, -0.5};
    config.p_grid = uniform_p_grid(6);
    config.partitions = {BipartitionLabel::AB, BipartitionLabel::AEb, BipartitionLabel::EaEb};
    return config;
}

TEST(ExtractBipartition, VacuumEnvironmentsAtZero) {
    std::mt19937_64 rng(40);
    const auto rho = testing::random_two_qubit_state(rng);
    const auto global = evolve_global(rho, ChannelKind::BitFlip, 0.0);
    EXPECT_LE(max_abs_diff(extract_bipartition(global, BipartitionLabel::AB).matrix(), rho.matrix()), 1e-15);
    CMatrix vac(4);
    vac(0, 0) = 1.0;
    EXPECT_LE(max_abs_diff(extract_bipartition(global, BipartitionLabel::EaEb).matrix(), vac), 1e-15);
}

TEST(ExtractBipartition, RequiresFourQubits) {
    EXPECT_THROW(extract_bipartition(testing::singlet(), BipartitionLabel::AB), SubsystemError);
}

TEST(UniformGrid, Endpoints) {
    const auto g = uniform_p_grid();
    ASSERT_EQ(g.size(), 101u);
    EXPECT_EQ(g.front(), 0.0);
    EXPECT_EQ(g.back(), 1.0);
    EXPECT_EQ(uniform_p_grid(1), std::vector<double>{0.0});
    EXPECT_THROW(uniform_p_grid(0), std::invalid_argument);
}

TEST(ValidateConfig, RejectsMalformedConfigs) {
    auto config = small_config();
    EXPECT_NO_THROW(validate_config(config));
    config.p_grid = {0.0, 0.5, 0.5};
    EXPECT_THROW(validate_config(config), std::invalid_argument);
    config.p_grid = {0.0, 1.2};
    EXPECT_THROW(validate_config(config), std::invalid_argument);
    config.p_grid.clear();
    EXPECT_THROW(validate_config(config), std::invalid_argument);
    config = small_config();
    config.partitions.clear();
    EXPECT_THROW(validate_config(config), std::invalid_argument);
    config = small_config();
    config.measures = MeasureSet();
    EXPECT_THROW(validate_config(config), std::invalid_argument);
}

TEST(Sweep, ParallelMatchesSerialBitForBit) {
    const auto config = small_config();
    const auto par = sweep(config);
    const auto ser = sweep_serial(config);
    ASSERT_EQ(par.size(), 3u);
    for (std::size_t k = 0; k < par.size(); ++k) {
        EXPECT_EQ(par[k].partition, config.partitions[k]);
        ASSERT_EQ(par[k].rows.size(), config.p_grid.size());
        for (std::size_t i = 0; i < par[k].rows.size(); ++i) {
            EXPECT_EQ(par[k].rows[i].p, config.p_grid[i]);
            expect_identical(par[k].rows[i].report, ser[k].rows[i].report);
        }
    }
}

TEST(Sweep, RowsMatchDirectEvaluation) {
    auto config = small_config();
    config.measures = MeasureSet().add(Measure::MutualInfo).add(Measure::Concurrence);
    const auto out = sweep(config);
    const auto rho = build_initial_state(config.initial);
    for (std::size_t i = 0; i < config.p_grid.size(); ++i) {
        const auto ab = extract_bipartition(evolve_global(rho, config.channel, config.p_grid[i]), BipartitionLabel::AB);
        EXPECT_NEAR(out[0].rows[i].report.mutual_info, mutual_information(ab), 1e-15);
        EXPECT_NEAR(out[0].rows[i].report.concurrence, concurrence(ab), 1e-15);
        EXPECT_TRUE(std::isnan(out[0].rows[i].report.discord_b_measured));
    }
}

TEST(Sweep, InvalidInitialStateIsReported) {
    auto config = small_config();
    config.initial = BellDiagonalParams{1, 1, 1};
    EXPECT_THROW(sweep(config), InvalidStateError);
    config.tolerances.positivity = 1.0;
    // Loosened validation admits the state; the channels still produce
    // something that fails later validation along the trajectory.
    EXPECT_THROW(sweep(config), std::exception);
}

TEST(Sweep, RowFailuresCarryTheirStrength) {
    auto config = small_config();
    config.optimizer.one_side_phi = 0;
    for (auto run : {sweep, sweep_serial}) {
        try {
            run(config);
            FAIL() << "expected SweepError";
        } catch (const SweepError &e) {
            EXPECT_EQ(e.p(), 0.0);
        }
    }
}

TEST(FindTransition, SuddenDeathAndBirth) {
    const InitialState werner06 = BellDiagonalParams{-0.6, -0.6, -0.6};
    const auto sd = find_transition(ChannelKind::AmplitudeDamping, werner06, BipartitionLabel::AB,
                                    TransitionDirection::Death);
    ASSERT_TRUE(sd);
    EXPECT_NEAR(*sd, std::sqrt(24.0) - 4.0, 1e-9);
    const auto sb = find_transition(ChannelKind::AmplitudeDamping, werner06, BipartitionLabel::EaEb,
                                    TransitionDirection::Birth);
    ASSERT_TRUE(sb);
    EXPECT_NEAR(*sb, 5.0 - std::sqrt(24.0), 1e-9);
}

TEST(FindTransition, NoneWhenEntanglementOnlyVanishesAtTheEnd) {
    const InitialState singlet = BellDiagonalParams{-1, -1, -1};
    EXPECT_FALSE(find_transition(ChannelKind::AmplitudeDamping, singlet, BipartitionLabel::AB,
                                 TransitionDirection::Death));
    EXPECT_FALSE(find_transition(ChannelKind::AmplitudeDamping, singlet, BipartitionLabel::EaEb,
                                 TransitionDirection::Birth));
    // A separable Werner state never has anything to lose.
    const InitialState separable = BellDiagonalParams{-0.2, -0.2, -0.2};
    EXPECT_FALSE(find_transition(ChannelKind::PhaseFlip, separable, BipartitionLabel::AB, TransitionDirection::Death));
}

TEST(FindTransition, RejectsDegenerateScan) {
    TransitionOptions opts;
    opts.scan_points = 1;
    EXPECT_THROW(find_transition(ChannelKind::AmplitudeDamping, BellDiagonalParams{-1, -1, -1}, BipartitionLabel::AB,
                                 TransitionDirection::Death, opts),
                 std::invalid_argument);
}

TEST(EntanglementIndicator, SignTracksSeparability) {
    EXPECT_GT(entanglement_indicator(werner_state(0.6)), 0.0);
    EXPECT_LT(entanglement_indicator(werner_state(0.2)), 0.0);
    EXPECT_NEAR(entanglement_indicator(werner_state(1.0 / 3.0)), 0.0, 1e-15);
}

TEST(OperationalMeasures, Examples) {
    const auto prod = product_state(qubit_state(0.1, 0.2, 0.3), qubit_state(-0.3, 0.0, 0.4));
    for (auto kind : kAllChannels) {
        const auto m = operational_measures(prod, kind);
        EXPECT_NEAR(m.quantum, 0.0, 1e-12);
        EXPECT_NEAR(m.classical, 0.0, 1e-12);
    }
    const auto bell = operational_measures(testing::bell_phi_plus(), ChannelKind::PhaseFlip);
    EXPECT_NEAR(bell.quantum, 1.0, 1e-12);
    EXPECT_NEAR(bell.classical, 1.0, 1e-12);
}

TEST(PhaseDamping, SingleQubitDecoherenceEntanglesWithItsReservoir) {
    std::mt19937_64 rng(41);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 10; ++trial) {
        double x = g(rng), y = g(rng), z = g(rng);
        const double r = std::sqrt(x * x + y * y + z * z) / 0.9;
        const auto a = qubit_state(x / r, y / r, z / r);
        const auto rho = product_state(a, qubit_state(0, 0, 1));
        for (double p : {0.1, 0.5, 0.9}) {
            const auto pair = extract_bipartition(evolve_global(rho, ChannelKind::PhaseDamping, p), BipartitionLabel::AEa);
            EXPECT_GT(negativity(pair), 0.0) << "p=" << p;
        }
    }
}

}  // namespace
}  // namespace qdyn
