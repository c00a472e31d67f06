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

#ifndef QDYN_CHANNELS_HPP
#define QDYN_CHANNELS_HPP

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "qdyn/linalg.hpp"

namespace qdyn {

enum class ChannelKind { AmplitudeDamping, PhaseDamping, BitFlip, BitPhaseFlip, PhaseFlip };

inline constexpr std::array<ChannelKind, 5> kAllChannels = {
    ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping, ChannelKind::BitFlip,
    ChannelKind::BitPhaseFlip, ChannelKind::PhaseFlip};

/// Kebab-case name used on the command line ("amplitude-damping", ...).
std::string_view to_string(ChannelKind kind);
std::optional<ChannelKind> parse_channel(std::string_view name);

/// Single-qubit noise process at parametrized time p, as its Kraus set.
/// Kraus operator k couples to environment basis state |k>.
struct KrausChannel {
    ChannelKind kind;
    double p;
    std::vector<CMatrix> operators;
};

/// Amplitude damping {diag(1, sqrt q), sqrt p |0><1|}, phase damping
/// {diag(1, sqrt q), diag(0, sqrt p)}, and the flips
/// {sqrt(1 - p/2) I, sqrt(p/2) sigma_i} with i = x, y, z.
KrausChannel make_channel(ChannelKind kind, double p);

/// max |sum_k K_k^dagger K_k - I|.
double completeness_check(const KrausChannel &ch);

/// Operator-sum action on a single qubit.
CMatrix apply_channel(const CMatrix &rho, const KrausChannel &ch);

/// sum_kl (K_k (x) L_l) rho (K_k (x) L_l)^dagger on a two-qubit state.
DensityMatrix apply_local_channels(const DensityMatrix &rho_ab, const KrausChannel &ch_a,
                                   const KrausChannel &ch_b);

/// Isometry V: |psi>_S|0>_E -> sum_k K_k|psi>_S |k>_E, as a 4x2 matrix with
/// rows ordered (S, E).
std::vector<cplx> dilation_isometry(const KrausChannel &ch);

/// Four-party state (A, B, E_A, E_B) after each qubit interacts with its own
/// vacuum environment through the dilation of its channel.
DensityMatrix dilate_and_evolve_global(const DensityMatrix &rho_ab, const KrausChannel &ch_a,
                                       const KrausChannel &ch_b);

}  // namespace qdyn

#endif  // QDYN_CHANNELS_HPP
