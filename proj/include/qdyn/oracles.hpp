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

// Closed-form reduced states and correlation values for Bell-diagonal
// inputs under the five local channels. These are independent of the
// numerical dilation path and serve as its reference.

#ifndef QDYN_ORACLES_HPP
#define QDYN_ORACLES_HPP

#include <array>
#include <optional>
#include <string_view>

#include "qdyn/channels.hpp"
#include "qdyn/states.hpp"

namespace qdyn {

/// Two-party marginals of the (A, B, E_A, E_B) system.
enum class BipartitionLabel { AB, AEa, AEb, BEa, BEb, EaEb };

inline constexpr std::array<BipartitionLabel, 6> kAllBipartitions = {
    BipartitionLabel::AB,  BipartitionLabel::AEa, BipartitionLabel::AEb,
    BipartitionLabel::BEa, BipartitionLabel::BEb, BipartitionLabel::EaEb};

std::string_view to_string(BipartitionLabel part);
std::optional<BipartitionLabel> parse_bipartition(std::string_view name);
/// Global subsystem indices (A=0, B=1, E_A=2, E_B=3) of the pair, in order.
std::array<std::size_t, 2> subsystems_of(BipartitionLabel part);

/// Reduced state of `part` at time p for a Bell-diagonal initial state
/// with vacuum environments. B-E_B mirrors A-E_A and B-E_A mirrors A-E_B.
DensityMatrix closed_form_reduced(ChannelKind kind, BipartitionLabel part, const BellDiagonalParams &c,
                                  double p);

/// Largest surviving correlation coefficient |c_i'| of the evolved
/// Bell-diagonal AB state. Not defined for amplitude damping.
double chi(ChannelKind kind, const BellDiagonalParams &c, double p);

/// Classical correlation of a Bell-diagonal state whose largest |c_i| is chi.
double analytic_classical_correlation(double chi_value);

/// 2 + sum_k lambda_k log2 lambda_k - C(chi), with lambda_k the spectrum of
/// the evolved AB state.
double analytic_discord(const BellDiagonalParams &c, double p, ChannelKind kind);

/// Overlap of a four-party state with (|0101> - |1010>)/sqrt 2.
double ghz_asymptote_fidelity(const DensityMatrix &evolved);

}  // namespace qdyn

#endif  // QDYN_ORACLES_HPP
