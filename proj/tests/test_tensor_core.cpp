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

#include <array>
#include <random>

#include "qdyn/channels.hpp"
#include "qdyn/linalg.hpp"
#include "qdyn/oracles.hpp"
#include "qdyn/states.hpp"
#include "test_support.hpp"

namespace qdyn {
namespace {

using testing::eigen_spectrum;
using testing::random_density_matrix;

TEST(Kron, PauliProducts) {
    const auto xx = kron(pauli(1), pauli(1));
    EXPECT_EQ(xx(0, 3), cplx(1.0));
    EXPECT_EQ(kron(CMatrix::identity(2), CMatrix::identity(2)), CMatrix::identity(4));
    const auto zz = kron(pauli(3), pauli(3));
    const std::array<double, 4> diag = {1, -1, -1, 1};
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(zz(i, i), cplx(diag[i]));
}

TEST(Kron, MatchesDenseIndexFormula) {
    std::mt19937_64 rng(1);
    const auto a = random_density_matrix(rng, 2);
    const auto b = random_density_matrix(rng, 4);
    const auto k = kron(a, b);
    ASSERT_EQ(k.dim(), 8u);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) EXPECT_EQ(k(i, j), a(i / 4, j / 4) * b(i % 4, j % 4));
}

TEST(PartialTrace, BellMarginalIsMaximallyMixed) {
    const auto bell = testing::bell_phi_plus();
    const auto a = partial_trace(bell, {0});
    EXPECT_LE(max_abs_diff(a.matrix(), CMatrix::identity(2) * cplx(0.5)), 1e-15);
    EXPECT_EQ(a.dims(), std::vector<std::size_t>{2});
}

TEST(PartialTrace, ProductStateFactorizes) {
    const auto ra = qubit_state(0.1, -0.3, 0.5);
    const auto rb = qubit_state(-0.6, 0.2, 0.1);
    const auto ab = product_state(ra, rb);
    EXPECT_LE(max_abs_diff(partial_trace(ab, {0}).matrix(), ra.matrix()), 1e-15);
    EXPECT_LE(max_abs_diff(partial_trace(ab, {1}).matrix(), rb.matrix()), 1e-15);
}

TEST(PartialTrace, EvolvedGlobalStateMatchesClosedForm) {
    const BellDiagonalParams c{0.3, -0.5, 0.1};
    const auto ch = make_channel(ChannelKind::AmplitudeDamping, 0.3);
    const auto global = dilate_and_evolve_global(bell_diagonal_state(c), ch, ch);
    const auto ab = partial_trace(global, {0, 1});
    const auto expected = closed_form_reduced(ChannelKind::AmplitudeDamping, BipartitionLabel::AB, c, 0.3);
    EXPECT_LE(max_abs_diff(ab.matrix(), expected.matrix()), 1e-12);
}

TEST(PartialTrace, KeptFactorsStayInSubsystemOrder) {
    const auto ra = qubit_state(0.0, 0.0, 0.8);
    const auto rb = qubit_state(0.7, 0.0, 0.0);
    const auto ab = product_state(ra, rb);
    const auto kept = partial_trace(ab, {1, 0});
    EXPECT_LE(max_abs_diff(kept.matrix(), ab.matrix()), 1e-15);
}

TEST(PartialTrace, RejectsBadIndices) {
    const auto bell = testing::bell_phi_plus();
    EXPECT_THROW(partial_trace(bell, {2}), SubsystemError);
    EXPECT_THROW(partial_trace(bell, {0, 0}), SubsystemError);
}

TEST(PartialTranspose, ProductTransposesOneFactor) {
    const auto ra = qubit_state(0.2, 0.4, -0.1);
    const auto rb = qubit_state(-0.3, 0.5, 0.2);
    const auto pt = partial_transpose(product_state(ra, rb), 0);
    EXPECT_LE(max_abs_diff(pt, kron(ra.matrix().transpose(), rb.matrix())), 1e-15);
}

TEST(PartialTranspose, BellHasEigenvalueMinusHalf) {
    const auto spectrum = eigen_spectrum(partial_transpose(testing::bell_phi_plus(), 0));
    EXPECT_NEAR(spectrum.front(), -0.5, 1e-12);
}

TEST(PartialTranspose, MatchesIndexFormula) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto rho = testing::random_two_qubit_state(rng);
        EXPECT_LE(max_abs_diff(partial_transpose(rho, 0), testing::transpose_first_qubit(rho.matrix())), 1e-15);
    }
}

TEST(PartialTranspose, PhaseDampedSystemEnvironmentPairIsInvariant) {
    for (double p : {0.0, 0.2, 0.5, 0.9, 1.0}) {
        const auto rho = closed_form_reduced(ChannelKind::PhaseDamping, BipartitionLabel::AEa, {0.1, 0.2, 0.3}, p);
        EXPECT_LE(max_abs_diff(partial_transpose(rho, 0), rho.matrix()), 1e-15) << "p=" << p;
    }
}

TEST(PartialTranspose, RequiresBipartition) {
    const auto four = attach_vacuum_environments(testing::bell_phi_plus());
    EXPECT_THROW(partial_transpose(four, 0), SubsystemError);
}

TEST(HermitianEigen, SimpleSpectra) {
    const auto flat = hermitian_eigenvalues(CMatrix::identity(4) * cplx(0.25));
    for (double v : flat) EXPECT_NEAR(v, 0.25, 1e-15);
    const auto x = hermitian_eigenvalues(pauli(1));
    EXPECT_NEAR(x[0], -1.0, 1e-15);
    EXPECT_NEAR(x[1], 1.0, 1e-15);
    const auto w = hermitian_eigenvalues(werner_state(0.5).matrix());
    EXPECT_NEAR(w[0], 0.125, 1e-14);
    EXPECT_NEAR(w[1], 0.125, 1e-14);
    EXPECT_NEAR(w[2], 0.125, 1e-14);
    EXPECT_NEAR(w[3], 0.625, 1e-14);
}

TEST(HermitianEigen, AgreesWithEigenOnRandomMatrices) {
    std::mt19937_64 rng(11);
    for (std::size_t dim : {2u, 4u, 8u, 16u}) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto m = random_density_matrix(rng, dim);
            const auto ours = hermitian_eigen(m);
            const auto ref = eigen_spectrum(m);
            for (std::size_t k = 0; k < dim; ++k) EXPECT_NEAR(ours.values[k], ref[k], 1e-12);
            // A V = V diag(values)
            const auto av = m * ours.vectors;
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t k = 0; k < dim; ++k)
                    EXPECT_LE(std::abs(av(i, k) - ours.vectors(i, k) * ours.values[k]), 1e-12);
            const auto gram = ours.vectors.adjoint() * ours.vectors;
            EXPECT_LE(max_abs_diff(gram, CMatrix::identity(dim)), 1e-12);
        }
    }
}

TEST(HermitianEigen, RejectsNonHermitian) {
    CMatrix m{{1, 2}, {0, 1}};
    EXPECT_THROW(hermitian_eigenvalues(m), NotHermitianError);
}

TEST(PsdSqrt, DiagonalAndIdentity) {
    EXPECT_LE(max_abs_diff(psd_sqrt(CMatrix::identity(4)), CMatrix::identity(4)), 1e-15);
    const std::array<double, 4> d{4, 1, 0, 0}, s{2, 1, 0, 0};
    EXPECT_LE(max_abs_diff(psd_sqrt(CMatrix::diagonal(d)), CMatrix::diagonal(s)), 1e-14);
}

TEST(PsdSqrt, SquaresBack) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const auto m = random_density_matrix(rng, 4);
        const auto r = psd_sqrt(m);
        EXPECT_LE(max_abs_diff(r * r, m), 1e-12);
        EXPECT_LE(hermiticity_defect(r), 1e-14);
    }
}

TEST(PsdSqrt, RejectsNegativeSpectrum) {
    const std::array<double, 2> d{1.0, -1e-6};
    EXPECT_THROW(psd_sqrt(CMatrix::diagonal(d)), InvalidStateError);
}

TEST(ValidateDensity, AcceptsMaximallyMixed) {
    EXPECT_NO_THROW(validate_density(CMatrix::identity(4) * cplx(0.25), {2, 2}));
}

TEST(ValidateDensity, NamesTheViolation) {
    auto violation_of = [](CMatrix m, std::vector<std::size_t> dims) {
        try {
            validate_density(std::move(m), std::move(dims));
        } catch (const InvalidStateError &e) {
            return std::optional<std::pair<Violation, double>>({e.violation(), e.magnitude()});
        }
        return std::optional<std::pair<Violation, double>>();
    };

    // Bell-diagonal c = (1, 1, 1): one Bell weight is -1/2.
    CMatrix bad = CMatrix::identity(4) * cplx(0.25);
    for (int k = 1; k <= 3; ++k) bad += kron(pauli(k), pauli(k)) * cplx(0.25);
    const auto pos = violation_of(bad, {2, 2});
    ASSERT_TRUE(pos);
    EXPECT_EQ(pos->first, Violation::Positivity);
    EXPECT_NEAR(pos->second, -0.5, 1e-12);

    const auto tr = violation_of(CMatrix::identity(4) * cplx(0.99 / 4), {2, 2});
    ASSERT_TRUE(tr);
    EXPECT_EQ(tr->first, Violation::Trace);
    EXPECT_NEAR(std::abs(tr->second), 0.01, 1e-12);

    CMatrix skew = CMatrix::identity(2) * cplx(0.5);
    skew(0, 1) = 0.1;
    const auto herm = violation_of(skew, {2});
    ASSERT_TRUE(herm);
    EXPECT_EQ(herm->first, Violation::Hermiticity);

    const auto dims = violation_of(CMatrix::identity(4) * cplx(0.25), {2, 3});
    ASSERT_TRUE(dims);
    EXPECT_EQ(dims->first, Violation::Dimensions);
}

TEST(ValidateDensity, LooserTolerancesAdmitSmallDefects) {
    const auto m = CMatrix::identity(4) * cplx(0.99 / 4);
    EXPECT_THROW(validate_density(m, {2, 2}), InvalidStateError);
    Tolerances loose;
    loose.trace = 0.02;
    EXPECT_NO_THROW(validate_density(m, {2, 2}, loose));
}

}  // namespace
}  // namespace qdyn
