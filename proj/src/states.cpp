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

#include "qdyn/states.hpp"

#include <cmath>
#include <stdexcept>

namespace qdyn {

std::array<double, 4> BellDiagonalParams::bell_weights() const {
    return {(1.0 - c1 - c2 - c3) / 4.0, (1.0 - c1 + c2 + c3) / 4.0, (1.0 + c1 - c2 + c3) / 4.0,
            (1.0 + c1 + c2 - c3) / 4.0};
}

bool BellDiagonalParams::is_physical(double tol) const {
    for (double w : bell_weights())
        if (w < -tol) return false;
    return true;
}

BellDiagonalParams sample_bell_diagonal(std::mt19937_64 &rng) {
    std::exponential_distribution<double> expo(1.0);
    std::array<double, 4> w{};
    double total = 0.0;
    for (auto &x : w) total += (x = expo(rng));
    for (auto &x : w) x /= total;
    // Invert bell_weights().
    return {w[2] + w[3] - w[0] - w[1], w[1] + w[3] - w[0] - w[2], w[1] + w[2] - w[0] - w[3]};
}

DensityMatrix general_two_qubit_state(const GeneralTwoQubitParams &params, const Tolerances &tol) {
    if (std::abs(params.c[0][0] - 1.0) > 1e-12) {
        throw std::invalid_argument("general_two_qubit_state: c[0][0] must equal 1");
    }
    CMatrix m(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const double cij = params.c[i][j];
            if (cij == 0.0) continue;
            m += kron(pauli(i), pauli(j)) * cplx(cij / 4.0);
        }
    return validate_density(std::move(m), {2, 2}, tol);
}

DensityMatrix bell_diagonal_state(const BellDiagonalParams &params, const Tolerances &tol) {
    const auto [c1, c2, c3] = params;
    CMatrix m(4);
    m(0, 0) = (1.0 + c3) / 4.0;
    m(1, 1) = (1.0 - c3) / 4.0;
    m(2, 2) = (1.0 - c3) / 4.0;
    m(3, 3) = (1.0 + c3) / 4.0;
    m(0, 3) = m(3, 0) = (c1 - c2) / 4.0;
    m(1, 2) = m(2, 1) = (c1 + c2) / 4.0;
    return validate_density(std::move(m), {2, 2}, tol);
}

DensityMatrix werner_state(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("werner_state: alpha must lie in [0, 1]");
    }
    return bell_diagonal_state({-alpha, -alpha, -alpha});
}

GeneralTwoQubitParams pauli_coefficients(const DensityMatrix &rho_ab) {
    if (rho_ab.dim() != 4) throw SubsystemError("pauli_coefficients: two-qubit state required");
    GeneralTwoQubitParams out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            out.c[i][j] = (rho_ab.matrix() * kron(pauli(i), pauli(j))).trace().real();
    return out;
}

DensityMatrix attach_vacuum_environments(const DensityMatrix &rho_ab) {
    if (rho_ab.dims() != std::vector<std::size_t>{2, 2}) {
        throw SubsystemError("attach_vacuum_environments: two-qubit state required");
    }
    CMatrix vac(4);
    vac(0, 0) = 1.0;
    return validate_density(kron(rho_ab.matrix(), vac), {2, 2, 2, 2});
}

DensityMatrix pure_state(std::span<const cplx> amplitudes, std::vector<std::size_t> dims) {
    double norm = 0.0;
    for (const auto &a : amplitudes) norm += std::norm(a);
    if (norm == 0.0) throw std::invalid_argument("pure_state: zero vector");
    const std::size_t n = amplitudes.size();
    CMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = amplitudes[i] * std::conj(amplitudes[j]) / norm;
    return validate_density(std::move(m), std::move(dims));
}

DensityMatrix product_state(const DensityMatrix &a, const DensityMatrix &b) {
    std::vector<std::size_t> dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    return validate_density(kron(a.matrix(), b.matrix()), std::move(dims));
}

DensityMatrix qubit_state(double x, double y, double z) {
    CMatrix m = (pauli(0) + pauli(1) * cplx(x) + pauli(2) * cplx(y) + pauli(3) * cplx(z)) * cplx(0.5);
    return validate_density(std::move(m), {2});
}

}  // namespace qdyn
