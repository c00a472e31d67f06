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

#include "qdyn/channels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qdyn {

std::string_view to_string(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::AmplitudeDamping:
            return "amplitude-damping";
        case ChannelKind::PhaseDamping:
            return "phase-damping";
        case ChannelKind::BitFlip:
            return "bit-flip";
        case ChannelKind::BitPhaseFlip:
            return "bit-phase-flip";
        case ChannelKind::PhaseFlip:
            return "phase-flip";
    }
    return "unknown";
}

std::optional<ChannelKind> parse_channel(std::string_view name) {
    for (ChannelKind k : kAllChannels)
        if (to_string(k) == name) return k;
    return std::nullopt;
}

KrausChannel make_channel(ChannelKind kind, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("make_channel: p must lie in [0, 1], got " + std::to_string(p));
    }
    const double q = 1.0 - p;
    KrausChannel ch{kind, p, {}};
    switch (kind) {
        case ChannelKind::AmplitudeDamping:
            ch.operators = {CMatrix{{1.0, 0.0}, {0.0, std::sqrt(q)}},
                            CMatrix{{0.0, std::sqrt(p)}, {0.0, 0.0}}};
            break;
        case ChannelKind::PhaseDamping:
            ch.operators = {CMatrix{{1.0, 0.0}, {0.0, std::sqrt(q)}},
                            CMatrix{{0.0, 0.0}, {0.0, std::sqrt(p)}}};
            break;
        case ChannelKind::BitFlip:
        case ChannelKind::BitPhaseFlip:
        case ChannelKind::PhaseFlip: {
            const int axis = kind == ChannelKind::BitFlip ? 1 : kind == ChannelKind::BitPhaseFlip ? 2 : 3;
            // Weight p/2 on the flip keeps sum K^dagger K = I with q' = 1 - p/2.
            ch.operators = {pauli(0) * cplx(std::sqrt(1.0 - p / 2.0)),
                            pauli(axis) * cplx(std::sqrt(p / 2.0))};
            break;
        }
    }
    return ch;
}

double completeness_check(const KrausChannel &ch) {
    CMatrix sum(2);
    for (const auto &k : ch.operators) sum += k.adjoint() * k;
    return max_abs_diff(sum, CMatrix::identity(2));
}

CMatrix apply_channel(const CMatrix &rho, const KrausChannel &ch) {
    CMatrix out(rho.dim());
    for (const auto &k : ch.operators) out += k * rho * k.adjoint();
    return out;
}

DensityMatrix apply_local_channels(const DensityMatrix &rho_ab, const KrausChannel &ch_a,
                                   const KrausChannel &ch_b) {
    if (rho_ab.dims() != std::vector<std::size_t>{2, 2}) {
        throw SubsystemError("apply_local_channels: two-qubit state required");
    }
    CMatrix out(4);
    for (const auto &ka : ch_a.operators)
        for (const auto &kb : ch_b.operators) {
            const CMatrix k = kron(ka, kb);
            out += k * rho_ab.matrix() * k.adjoint();
        }
    return validate_density(std::move(out), {2, 2});
}

std::vector<cplx> dilation_isometry(const KrausChannel &ch) {
    if (ch.operators.size() > 2) {
        throw std::invalid_argument(
            "dilation: a single environment qubit supports at most 2 Kraus operators");
    }
    // v[(s * 2 + k) * 2 + in] = <s|K_k|in>
    std::vector<cplx> v(8, cplx{});
    for (std::size_t k = 0; k < ch.operators.size(); ++k)
        for (std::size_t s = 0; s < 2; ++s)
            for (std::size_t in = 0; in < 2; ++in) v[(s * 2 + k) * 2 + in] = ch.operators[k](s, in);
    return v;
}

DensityMatrix dilate_and_evolve_global(const DensityMatrix &rho_ab, const KrausChannel &ch_a,
                                       const KrausChannel &ch_b) {
    if (rho_ab.dims() != std::vector<std::size_t>{2, 2}) {
        throw SubsystemError("dilate_and_evolve_global: two-qubit state required");
    }
    const auto va = dilation_isometry(ch_a);
    const auto vb = dilation_isometry(ch_b);

    // W maps |a b> to sum (K_k|a>)(L_l|b>)|k l>, output index ordered (A, B, E_A, E_B).
    // Stored as 16 x 4.
    std::vector<cplx> w(16 * 4, cplx{});
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t ea = 0; ea < 2; ++ea)
            for (std::size_t b = 0; b < 2; ++b)
                for (std::size_t eb = 0; eb < 2; ++eb) {
                    const std::size_t row = ((a * 2 + b) * 2 + ea) * 2 + eb;
                    for (std::size_t ia = 0; ia < 2; ++ia)
                        for (std::size_t ib = 0; ib < 2; ++ib)
                            w[row * 4 + ia * 2 + ib] =
                                va[(a * 2 + ea) * 2 + ia] * vb[(b * 2 + eb) * 2 + ib];
                }

    // out = W rho W^dagger
    const auto &rho = rho_ab.matrix();
    std::vector<cplx> wr(16 * 4, cplx{});
    for (std::size_t r = 0; r < 16; ++r)
        for (std::size_t k = 0; k < 4; ++k) {
            const cplx wrk = w[r * 4 + k];
            if (wrk == cplx{}) continue;
            for (std::size_t c = 0; c < 4; ++c) wr[r * 4 + c] += wrk * rho(k, c);
        }
    CMatrix out(16);
    for (std::size_t r = 0; r < 16; ++r)
        for (std::size_t c = 0; c < 16; ++c) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < 4; ++k) acc += wr[r * 4 + k] * std::conj(w[c * 4 + k]);
            out(r, c) = acc;
        }
    return validate_density(std::move(out), {2, 2, 2, 2});
}

}  // namespace qdyn
