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

#ifndef QDYN_STATES_HPP
#define QDYN_STATES_HPP

#include <array>
#include <random>

#include "qdyn/linalg.hpp"

namespace qdyn {

/// Correlation-matrix diagonal (c1, c2, c3) of a Bell-diagonal state
/// rho = (I + sum_i c_i sigma_i (x) sigma_i) / 4.
struct BellDiagonalParams {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;

    /// The four Bell-basis weights; all must be >= -1e-12 for a valid state.
    std::array<double, 4> bell_weights() const;
    bool is_physical(double tol = 1e-12) const;
};

/// Full Pauli expansion rho = (1/4) sum_ij c[i][j] sigma_i (x) sigma_j
/// with c[0][0] == 1.
struct GeneralTwoQubitParams {
    std::array<std::array<double, 4>, 4> c{};
};

DensityMatrix general_two_qubit_state(const GeneralTwoQubitParams &params, const Tolerances &tol = {});
DensityMatrix bell_diagonal_state(const BellDiagonalParams &params, const Tolerances &tol = {});
DensityMatrix werner_state(double alpha);

/// c[i][j] = Tr[rho (sigma_i (x) sigma_j)], the inverse of
/// general_two_qubit_state.
GeneralTwoQubitParams pauli_coefficients(const DensityMatrix &rho_ab);

/// rho_ab (x) |0><0| (x) |0><0| with factor order (A, B, E_A, E_B).
DensityMatrix attach_vacuum_environments(const DensityMatrix &rho_ab);

/// |psi><psi| for a normalized (or normalizable) state vector.
DensityMatrix pure_state(std::span<const cplx> amplitudes, std::vector<std::size_t> dims);

DensityMatrix product_state(const DensityMatrix &a, const DensityMatrix &b);

/// Bell-diagonal parameters drawn uniformly from the tetrahedron of
/// physical states (Dirichlet(1,1,1,1) Bell weights).
BellDiagonalParams sample_bell_diagonal(std::mt19937_64 &rng);

/// Single-qubit state (I + r.sigma)/2.
DensityMatrix qubit_state(double x, double y, double z);

}  // namespace qdyn

#endif  // QDYN_STATES_HPP
