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

#include "qdyn/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qdyn {

namespace {

constexpr cplx I{0.0, 1.0};

using Rows = std::array<std::array<cplx, 4>, 4>;

DensityMatrix finish(const Rows &rows, double scale) {
    CMatrix m(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = rows[i][j] * scale;
    return validate_density(std::move(m), {2, 2});
}

// Printed pattern shared by the A-E_A and A-E_B flip-channel marginals:
// support on the diagonal and anti-diagonal, coherence `w` in the upper
// triangle.
Rows flip_x_pattern(double qp, double p, cplx w) {
    return Rows{{{qp, 0, 0, w}, {0, p / 2, w, 0}, {0, std::conj(w), qp, 0}, {std::conj(w), 0, 0, p / 2}}};
}

// Environment-pair marginal of the flip channels; `ci` is the coefficient
// of the protected axis.
Rows flip_env_pair(double qp, double p, double ci) {
    const double e = ci * p * qp / 2;
    return Rows{{{qp * qp, 0, 0, e}, {0, p * qp / 2, e, 0}, {0, e, p * qp / 2, 0}, {e, 0, 0, p * p / 4}}};
}

DensityMatrix amplitude_damping(BipartitionLabel part, const BellDiagonalParams &c, double p) {
    const double q = 1 - p;
    const auto [c1, c2, c3] = c;
    const double r = std::sqrt(p * q);
    switch (part) {
        case BipartitionLabel::AB: {
            const double mid = (1 - c3) * q + (1 + c3) * p * q;
            return finish({{{(1 + p) * (1 + p) + (1 - p) * (1 - p) * c3, 0, 0, q * (c1 - c2)},
                            {0, mid, q * (c1 + c2), 0},
                            {0, q * (c1 + c2), mid, 0},
                            {q * (c1 - c2), 0, 0, q * q * (1 + c3)}}},
                          0.25);
        }
        case BipartitionLabel::AEa:
        case BipartitionLabel::BEb:
            return finish({{{1, 0, 0, 0}, {0, p, r, 0}, {0, r, q, 0}, {0, 0, 0, 0}}}, 0.5);
        case BipartitionLabel::AEb:
        case BipartitionLabel::BEa:
            // The (c1 + c2) sqrt(pq) coherence between |0 1> and |1 0> comes
            // from the |01>,|10> system coherence when B decays and A survives.
            return finish({{{(1 + c3) * (1 + p * q) + 1 - c3, 0, 0, (c1 - c2) * r},
                            {0, (1 - c3) * p + (1 + c3) * p * p, (c1 + c2) * r, 0},
                            {0, (c1 + c2) * r, (1 - c3) * q + (1 + c3) * q * q, 0},
                            {(c1 - c2) * r, 0, 0, (1 + c3) * p * q}}},
                          0.25);
        case BipartitionLabel::EaEb: {
            const double mid = (1 - c3) * p + (1 + c3) * p * q;
            return finish({{{(1 + q) * (1 + q) + (1 - q) * (1 - q) * c3, 0, 0, (c1 - c2) * p},
                            {0, mid, (c1 + c2) * p, 0},
                            {0, (c1 + c2) * p, mid, 0},
                            {(c1 - c2) * p, 0, 0, (1 + c3) * p * p}}},
                          0.25);
        }
    }
    throw std::logic_error("unreachable");
}

DensityMatrix phase_damping(BipartitionLabel part, const BellDiagonalParams &c, double p) {
    const double q = 1 - p;
    const auto [c1, c2, c3] = c;
    const double r = std::sqrt(p * q);
    const double cm = c1 - c2, cp = c1 + c2;
    switch (part) {
        case BipartitionLabel::AB:
            return finish({{{1 + c3, 0, 0, cm * q},
                            {0, 1 - c3, cp * q, 0},
                            {0, cp * q, 1 - c3, 0},
                            {cm * q, 0, 0, 1 + c3}}},
                          0.25);
        case BipartitionLabel::AEa:
        case BipartitionLabel::BEb:
            return finish({{{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1 - p, r}, {0, 0, r, p}}}, 0.5);
        case BipartitionLabel::AEb:
        case BipartitionLabel::BEa:
            return finish({{{1 + q + p * c3, (1 - c3) * r, 0, 0},
                            {(1 - c3) * r, (1 - c3) * p, 0, 0},
                            {0, 0, 1 + q - p * c3, (1 + c3) * r},
                            {0, 0, (1 + c3) * r, (1 + c3) * p}}},
                          0.25);
        case BipartitionLabel::EaEb: {
            const double g = 2 - (1 + c3) * p;
            const double u = 1 + c3;
            return finish({{{4 * q + u * p * p, g * r, g * r, u * p * q},
                            {g * r, g * p, u * p * q, u * p * r},
                            {g * r, u * p * q, g * p, u * p * r},
                            {u * p * q, u * p * r, u * p * r, u * p * p}}},
                          0.25);
        }
    }
    throw std::logic_error("unreachable");
}

DensityMatrix flip(ChannelKind kind, BipartitionLabel part, const BellDiagonalParams &c, double p) {
    const double q = 1 - p, q2 = q * q;
    const double qp = 1 - p / 2;  // q'
    const double s = std::sqrt(p * qp / 2);
    const auto [c1, c2, c3] = c;

    switch (kind) {
        case ChannelKind::BitFlip:
            switch (part) {
                case BipartitionLabel::AB:
                    return finish({{{1 + c3 * q2, 0, 0, c1 - c2 * q2},
                                    {0, 1 - c3 * q2, c1 + c2 * q2, 0},
                                    {0, c1 + c2 * q2, 1 - c3 * q2, 0},
                                    {c1 - c2 * q2, 0, 0, 1 + c3 * q2}}},
                                  0.25);
                case BipartitionLabel::AEa:
                case BipartitionLabel::BEb:
                    return finish(flip_x_pattern(qp, p, s), 0.5);
                case BipartitionLabel::AEb:
                case BipartitionLabel::BEa:
                    return finish(flip_x_pattern(qp, p, c1 * s), 0.5);
                case BipartitionLabel::EaEb:
                    return finish(flip_env_pair(qp, p, c1), 1.0);
            }
            break;
        case ChannelKind::BitPhaseFlip:
            switch (part) {
                case BipartitionLabel::AB:
                    return finish({{{1 + c3 * q2, 0, 0, c1 * q2 - c2},
                                    {0, 1 - c3 * q2, c1 * q2 + c2, 0},
                                    {0, c1 * q2 + c2, 1 - c3 * q2, 0},
                                    {c1 * q2 - c2, 0, 0, 1 + c3 * q2}}},
                                  0.25);
                case BipartitionLabel::AEa:
                case BipartitionLabel::BEb:
                    return finish(flip_x_pattern(qp, p, -I * s), 0.5);
                case BipartitionLabel::AEb:
                case BipartitionLabel::BEa:
                    return finish(flip_x_pattern(qp, p, -I * c2 * s), 0.5);
                case BipartitionLabel::EaEb:
                    return finish(flip_env_pair(qp, p, c2), 1.0);
            }
            break;
        case ChannelKind::PhaseFlip: {
            const double cm = c1 - c2, cp = c1 + c2;
            switch (part) {
                case BipartitionLabel::AB:
                    return finish({{{1 + c3, 0, 0, cm * q2},
                                    {0, 1 - c3, cp * q2, 0},
                                    {0, cp * q2, 1 - c3, 0},
                                    {cm * q2, 0, 0, 1 + c3}}},
                                  0.25);
                case BipartitionLabel::AEa:
                case BipartitionLabel::BEb:
                    return finish({{{qp, s, 0, 0}, {s, p / 2, 0, 0}, {0, 0, qp, -s}, {0, 0, -s, p / 2}}}, 0.5);
                case BipartitionLabel::AEb:
                case BipartitionLabel::BEa:
                    return finish({{{qp, c3 * s, 0, 0},
                                    {c3 * s, p / 2, 0, 0},
                                    {0, 0, qp, -c3 * s},
                                    {0, 0, -c3 * s, p / 2}}},
                                  0.5);
                case BipartitionLabel::EaEb:
                    return finish(flip_env_pair(qp, p, c3), 1.0);
            }
            break;
        }
        default:
            break;
    }
    throw std::logic_error("flip: not a flip channel");
}

}  // namespace

std::string_view to_string(BipartitionLabel part) {
    switch (part) {
        case BipartitionLabel::AB:
            return "AB";
        case BipartitionLabel::AEa:
            return "AEa";
        case BipartitionLabel::AEb:
            return "AEb";
        case BipartitionLabel::BEa:
            return "BEa";
        case BipartitionLabel::BEb:
            return "BEb";
        case BipartitionLabel::EaEb:
            return "EaEb";
    }
    return "unknown";
}

std::optional<BipartitionLabel> parse_bipartition(std::string_view name) {
    for (BipartitionLabel b : kAllBipartitions)
        if (to_string(b) == name) return b;
    return std::nullopt;
}

std::array<std::size_t, 2> subsystems_of(BipartitionLabel part) {
    switch (part) {
        case BipartitionLabel::AB:
            return {0, 1};
        case BipartitionLabel::AEa:
            return {0, 2};
        case BipartitionLabel::AEb:
            return {0, 3};
        case BipartitionLabel::BEa:
            return {1, 2};
        case BipartitionLabel::BEb:
            return {1, 3};
        case BipartitionLabel::EaEb:
            return {2, 3};
    }
    throw std::logic_error("unreachable");
}

DensityMatrix closed_form_reduced(ChannelKind kind, BipartitionLabel part, const BellDiagonalParams &c,
                                  double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("closed_form_reduced: p must lie in [0, 1]");
    if (!c.is_physical()) {
        const auto w = c.bell_weights();
        throw InvalidStateError(Violation::Positivity, *std::min_element(w.begin(), w.end()),
                                "closed_form_reduced: Bell-diagonal parameters are not a state");
    }
    switch (kind) {
        case ChannelKind::AmplitudeDamping:
            return amplitude_damping(part, c, p);
        case ChannelKind::PhaseDamping:
            return phase_damping(part, c, p);
        default:
            return flip(kind, part, c, p);
    }
}

double chi(ChannelKind kind, const BellDiagonalParams &c, double p) {
    const double q = 1 - p, q2 = q * q;
    const double a1 = std::abs(c.c1), a2 = std::abs(c.c2), a3 = std::abs(c.c3);
    switch (kind) {
        case ChannelKind::PhaseDamping:
            // Coherences of the phase-damped AB state scale by q, not q^2.
            return std::max({q * a1, q * a2, a3});
        case ChannelKind::BitFlip:
            return std::max({a1, q2 * a2, q2 * a3});
        case ChannelKind::BitPhaseFlip:
            return std::max({q2 * a1, a2, q2 * a3});
        case ChannelKind::PhaseFlip:
            return std::max({q2 * a1, q2 * a2, a3});
        case ChannelKind::AmplitudeDamping:
            break;
    }
    throw std::invalid_argument("chi: no closed form for amplitude damping");
}

double analytic_classical_correlation(double chi_value) {
    if (!(chi_value >= 0.0 && chi_value <= 1.0)) {
        throw std::invalid_argument("analytic_classical_correlation: chi must lie in [0, 1]");
    }
    auto term = [](double x) { return x > 0.0 ? 0.5 * x * std::log2(x) : 0.0; };
    return term(1.0 - chi_value) + term(1.0 + chi_value);
}

double analytic_discord(const BellDiagonalParams &c, double p, ChannelKind kind) {
    const double x = chi(kind, c, p);
    const auto rho = closed_form_reduced(kind, BipartitionLabel::AB, c, p);
    double sum = 0.0;
    for (double lambda : hermitian_eigenvalues(rho.matrix()))
        if (lambda > 0.0) sum += lambda * std::log2(lambda);
    return 2.0 + sum - analytic_classical_correlation(x);
}

double ghz_asymptote_fidelity(const DensityMatrix &evolved) {
    if (evolved.dims() != std::vector<std::size_t>{2, 2, 2, 2}) {
        throw SubsystemError("ghz_asymptote_fidelity: four-qubit state required");
    }
    constexpr std::size_t k0101 = 0b0101, k1010 = 0b1010;
    const cplx v = evolved(k0101, k0101) + evolved(k1010, k1010) - evolved(k0101, k1010) -
                   evolved(k1010, k0101);
    return 0.5 * v.real();
}

}  // namespace qdyn
