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

#ifndef QDYN_MEASURES_HPP
#define QDYN_MEASURES_HPP

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "qdyn/linalg.hpp"
#include "qdyn/optimize.hpp"

namespace qdyn {

/// Projective qubit measurement {(I + n.sigma)/2, (I - n.sigma)/2} with
/// n = (sin theta cos phi, sin theta sin phi, cos theta).
struct MeasurementBasis {
    double theta = 0.0;  // [0, pi]
    double phi = 0.0;    // [0, 2 pi)

    std::array<double, 3> direction() const;
    /// Projector for outcome +1 (index 0) or -1 (index 1).
    CMatrix projector(int outcome) const;
    /// Folds arbitrary angles back into theta in [0, pi], phi in [0, 2 pi).
    static MeasurementBasis canonical(double theta, double phi);
};

enum class Side { A, B };

/// Grid sizes and simplex settings for the measurement extremizations.
/// Grids cover the upper hemisphere theta in [0, pi/2] only: n and -n
/// describe the same measurement with relabelled outcomes.
struct OptimizerSettings {
    int one_side_phi = 64;
    int one_side_theta = 32;
    int two_side_phi = 32;
    int two_side_theta = 16;
    SimplexOptions simplex{};
    bool parallel = true;  // OpenMP grid scan; false selects the serial reference
};

/// Results in [-kRoundoffClamp, 0) are reported as 0; more negative values
/// raise std::logic_error.
inline constexpr double kRoundoffClamp = 1e-6;

double shannon_entropy(std::span<const double> dist);
/// Base-2 von Neumann entropy over the clamped spectrum.
double von_neumann_entropy(const CMatrix &rho);
double von_neumann_entropy(const DensityMatrix &rho);
double mutual_information(const DensityMatrix &rho_ab);

/// H(A) + H(B) - H(A,B) of the outcome distribution of basis_a (x) basis_b.
double classical_mutual_information(const DensityMatrix &rho_ab, const MeasurementBasis &basis_a,
                                    const MeasurementBasis &basis_b);

/// sum_j q_j S(rho^j) of the unmeasured qubit after measuring `measured`.
double measured_conditional_entropy(const DensityMatrix &rho_ab, const MeasurementBasis &basis,
                                    Side measured = Side::B);

struct OneSideResult {
    double value = 0.0;
    MeasurementBasis basis;
};

struct TwoSideResult {
    double value = 0.0;
    MeasurementBasis basis_a;
    MeasurementBasis basis_b;
};

/// Henderson-Vedral classical correlation, maximized over projective
/// measurements on `measured`.
OneSideResult classical_correlation_hv(const DensityMatrix &rho_ab, Side measured = Side::B,
                                       const OptimizerSettings &settings = {});
double quantum_discord(const DensityMatrix &rho_ab, Side measured = Side::B,
                       const OptimizerSettings &settings = {});

/// Maximal classical mutual information under local measurements on both
/// qubits.
TwoSideResult two_side_classical(const DensityMatrix &rho_ab, const OptimizerSettings &settings = {});
double two_side_quantum(const DensityMatrix &rho_ab, const OptimizerSettings &settings = {});

/// True when every entry off the diagonal and anti-diagonal is below tol.
bool is_x_form(const CMatrix &rho, double tol = 1e-10);

/// The two signed quantities whose positive part is half the concurrence
/// of an X state: |rho_14| - sqrt(rho_22 rho_33), |rho_23| - sqrt(rho_11 rho_44).
std::array<double, 2> x_state_lambdas(const CMatrix &rho);

double xstate_concurrence(const DensityMatrix &rho);
/// Wootters concurrence for any two-qubit state.
double concurrence_general(const DensityMatrix &rho);
/// Closed form for X states, Wootters otherwise.
double concurrence(const DensityMatrix &rho);

/// Sum of |negative eigenvalues| of the partial transpose.
double negativity(const DensityMatrix &rho, std::size_t subsystem = 0);

/// Quantifiers that a report may include.
enum class Measure : unsigned {
    MutualInfo = 1u << 0,
    ClassicalTwoSide = 1u << 1,
    QuantumTwoSide = 1u << 2,
    Discord = 1u << 3,
    ClassicalHV = 1u << 4,
    Concurrence = 1u << 5,
    Negativity = 1u << 6,
};

class MeasureSet {
   public:
    constexpr MeasureSet() = default;
    constexpr explicit MeasureSet(unsigned bits) : bits_(bits) {}
    static constexpr MeasureSet all() { return MeasureSet(0x7f); }

    constexpr bool has(Measure m) const { return (bits_ & static_cast<unsigned>(m)) != 0; }
    constexpr MeasureSet &add(Measure m) {
        bits_ |= static_cast<unsigned>(m);
        return *this;
    }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr unsigned bits() const { return bits_; }

   private:
    unsigned bits_ = 0;
};

std::string_view to_string(Measure m);
std::optional<Measure> parse_measure(std::string_view name);
inline constexpr std::array<Measure, 7> kAllMeasures = {
    Measure::MutualInfo, Measure::ClassicalTwoSide, Measure::QuantumTwoSide, Measure::Discord,
    Measure::ClassicalHV, Measure::Concurrence,     Measure::Negativity};

/// Every quantifier for one bipartite state. One-side quantities measure
/// the second factor. Unrequested entries are NaN.
struct CorrelationReport {
    double mutual_info;
    double classical_two_side;
    double quantum_two_side;
    double discord_b_measured;
    double classical_hv_b_measured;
    double concurrence;
    double negativity;
    MeasurementBasis hv_basis;
    MeasurementBasis two_side_basis_a;
    MeasurementBasis two_side_basis_b;
};

CorrelationReport evaluate_report(const DensityMatrix &rho_ab, MeasureSet measures = MeasureSet::all(),
                                  const OptimizerSettings &settings = {});

}  // namespace qdyn

#endif  // QDYN_MEASURES_HPP
