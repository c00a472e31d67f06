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
#include <random>

#include "qdyn/channels.hpp"
#include "qdyn/states.hpp"
#include "test_support.hpp"

namespace qdyn {
namespace {

// Operator-sum on two qubits written with explicit Kraus products, no
// dilation and no library helper.
CMatrix kraus_reference(const CMatrix &rho, const KrausChannel &a, const KrausChannel &b) {
    CMatrix out(4);
    for (const auto &ka : a.operators)
        for (const auto &kb : b.operators) {
            const auto k = kron(ka, kb);
            out += k * rho * k.adjoint();
        }
    return out;
}

TEST(MakeChannel, KrausShapes) {
    const double p = 0.36, q = 0.64;
    const auto ad = make_channel(ChannelKind::AmplitudeDamping, p);
    ASSERT_EQ(ad.operators.size(), 2u);
    EXPECT_NEAR(ad.operators[0](1, 1).real(), std::sqrt(q), 1e-15);
    EXPECT_NEAR(ad.operators[1](0, 1).real(), std::sqrt(p), 1e-15);

    const auto pd = make_channel(ChannelKind::PhaseDamping, p);
    EXPECT_NEAR(pd.operators[0](1, 1).real(), std::sqrt(q), 1e-15);
    EXPECT_NEAR(pd.operators[1](1, 1).real(), std::sqrt(p), 1e-15);
    EXPECT_EQ(pd.operators[1](0, 0), cplx(0.0));

    const auto bf = make_channel(ChannelKind::BitFlip, 1.0);
    EXPECT_NEAR(bf.operators[0](0, 0).real(), std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(bf.operators[1](0, 1).real(), std::sqrt(0.5), 1e-15);
    EXPECT_LE(completeness_check(bf), 1e-15);

    const auto bpf = make_channel(ChannelKind::BitPhaseFlip, 0.5);
    EXPECT_LE(max_abs_diff(bpf.operators[1], pauli(2) * cplx(0.5)), 1e-15);
    const auto pf = make_channel(ChannelKind::PhaseFlip, 0.5);
    EXPECT_LE(max_abs_diff(pf.operators[1], pauli(3) * cplx(0.5)), 1e-15);
}

TEST(MakeChannel, RejectsOutOfRangeStrength) {
    EXPECT_THROW(make_channel(ChannelKind::BitFlip, -0.01), std::invalid_argument);
    EXPECT_THROW(make_channel(ChannelKind::BitFlip, 1.01), std::invalid_argument);
}

TEST(ChannelNames, RoundTrip) {
    for (auto k : kAllChannels) EXPECT_EQ(parse_channel(to_string(k)), k);
    EXPECT_FALSE(parse_channel("depolarizing"));
}

TEST(CompletenessCheck, Examples) {
    EXPECT_LE(completeness_check(make_channel(ChannelKind::PhaseFlip, 0.37)), 1e-15);
    EXPECT_LE(completeness_check(make_channel(ChannelKind::AmplitudeDamping, 0.5)), 1e-15);
    const KrausChannel broken{ChannelKind::BitFlip, 0.0, {CMatrix::identity(2), CMatrix::identity(2)}};
    EXPECT_NEAR(completeness_check(broken), 1.0, 1e-15);
}

TEST(CompletenessCheck, HoldsOnAGrid) {
    for (auto k : kAllChannels)
        for (int i = 0; i <= 20; ++i) EXPECT_LE(completeness_check(make_channel(k, i / 20.0)), 1e-15);
}

TEST(ApplyLocalChannels, IdentityAtZero) {
    std::mt19937_64 rng(2);
    for (auto k : kAllChannels) {
        const auto rho = testing::random_two_qubit_state(rng);
        const auto ch = make_channel(k, 0.0);
        EXPECT_LE(max_abs_diff(apply_local_channels(rho, ch, ch).matrix(), rho.matrix()), 1e-15);
    }
}

TEST(ApplyLocalChannels, FullAmplitudeDampingReachesGround) {
    std::mt19937_64 rng(4);
    const auto ch = make_channel(ChannelKind::AmplitudeDamping, 1.0);
    CMatrix ground(4);
    ground(0, 0) = 1.0;
    for (int trial = 0; trial < 5; ++trial)
        EXPECT_LE(max_abs_diff(apply_local_channels(testing::random_two_qubit_state(rng), ch, ch).matrix(), ground),
                  1e-15);
}

TEST(ApplyLocalChannels, MatchesExplicitKrausSum) {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        const auto rho = testing::random_two_qubit_state(rng);
        const auto a = make_channel(testing::random_channel(rng), u(rng));
        const auto b = make_channel(testing::random_channel(rng), u(rng));
        EXPECT_LE(max_abs_diff(apply_local_channels(rho, a, b).matrix(), kraus_reference(rho.matrix(), a, b)), 1e-15);
    }
}

TEST(DilateAndEvolve, VacuumAtZero) {
    std::mt19937_64 rng(8);
    const auto rho = testing::random_two_qubit_state(rng);
    for (auto k : kAllChannels) {
        const auto ch = make_channel(k, 0.0);
        const auto global = dilate_and_evolve_global(rho, ch, ch);
        EXPECT_LE(max_abs_diff(global.matrix(), attach_vacuum_environments(rho).matrix()), 1e-15);
    }
}

TEST(DilateAndEvolve, TracingEnvironmentsGivesOperatorSum) {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        const auto rho = testing::random_two_qubit_state(rng);
        const auto a = make_channel(testing::random_channel(rng), u(rng));
        const auto b = make_channel(testing::random_channel(rng), u(rng));
        const auto global = dilate_and_evolve_global(rho, a, b);
        EXPECT_EQ(global.dims(), (std::vector<std::size_t>{2, 2, 2, 2}));
        EXPECT_LE(max_abs_diff(partial_trace(global, {0, 1}).matrix(), kraus_reference(rho.matrix(), a, b)), 1e-14);
    }
}

TEST(DilateAndEvolve, PurityIsPreserved) {
    const auto ch = make_channel(ChannelKind::BitPhaseFlip, 0.42);
    const auto global = dilate_and_evolve_global(testing::singlet(), ch, ch);
    EXPECT_NEAR((global.matrix() * global.matrix()).trace().real(), 1.0, 1e-14);
}

TEST(DilateAndEvolve, EnvironmentIndexLayout) {
    // Amplitude damping at p = 1 on |11>: both excitations land in the
    // environments, giving |A B Ea Eb> = |0 0 1 1>.
    CMatrix m(4);
    m(3, 3) = 1.0;
    const auto rho = validate_density(m, {2, 2});
    const auto ch = make_channel(ChannelKind::AmplitudeDamping, 1.0);
    const auto global = dilate_and_evolve_global(rho, ch, ch);
    EXPECT_NEAR(global(0b0011, 0b0011).real(), 1.0, 1e-15);
}

TEST(DilateAndEvolve, RejectsWideChannels) {
    const auto id = CMatrix::identity(2) * cplx(1.0 / std::sqrt(3.0));
    const KrausChannel three{ChannelKind::BitFlip, 0.0, {id, id, id}};
    EXPECT_THROW(dilation_isometry(three), std::invalid_argument);
    EXPECT_THROW(dilate_and_evolve_global(testing::singlet(), three, three), std::invalid_argument);
}

}  // namespace
}  // namespace qdyn
