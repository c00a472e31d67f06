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

#include "qdyn/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "qdyn/states.hpp"

namespace qdyn {

namespace {

using Vec3 = std::array<double, 3>;

double dot(const Vec3 &x, const Vec3 &y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; }
double norm(const Vec3 &x) { return std::sqrt(dot(x, x)); }

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// Entropy of a qubit state with Bloch radius r.
double qubit_entropy(double r) {
    r = std::min(r, 1.0);
    return -xlog2x(0.5 * (1.0 + r)) - xlog2x(0.5 * (1.0 - r));
}

double binary_entropy(double p) { return -xlog2x(p) - xlog2x(1.0 - p); }

// rho = (1/4)(I + a.sigma (x) I + I (x) b.sigma + sum T_ij sigma_i (x) sigma_j)
struct BlochForm {
    Vec3 a{}, b{};
    std::array<Vec3, 3> t{};  // t[i][j]

    explicit BlochForm(const DensityMatrix &rho) {
        if (rho.dims() != std::vector<std::size_t>{2, 2}) {
            throw SubsystemError("correlation measures require a two-qubit state");
        }
        const auto c = pauli_coefficients(rho).c;
        for (int i = 0; i < 3; ++i) {
            a[i] = c[i + 1][0];
            b[i] = c[0][i + 1];
            for (int j = 0; j < 3; ++j) t[i][j] = c[i + 1][j + 1];
        }
    }

    Vec3 t_times(const Vec3 &m) const {
        return {dot(t[0], m), dot(t[1], m), dot(t[2], m)};
    }
    Vec3 t_transpose_times(const Vec3 &n) const {
        Vec3 r{};
        for (int j = 0; j < 3; ++j) r[j] = t[0][j] * n[0] + t[1][j] * n[1] + t[2][j] * n[2];
        return r;
    }
};

Vec3 direction_of(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

// sum_s q_s S(rho^s) for measuring along n on one side. `local` is the
// Bloch vector of the unmeasured qubit, `cross` is T n (or T^T n), and
// `measured_proj` is the measured qubit's Bloch vector dotted with n.
double conditional_entropy(const Vec3 &local, const Vec3 &cross, double measured_proj) {
    double total = 0.0;
    for (double s : {1.0, -1.0}) {
        const double q = 0.5 * (1.0 + s * measured_proj);
        if (q < 1e-12) continue;
        const Vec3 v{local[0] + s * cross[0], local[1] + s * cross[1], local[2] + s * cross[2]};
        total += q * qubit_entropy(norm(v) / (2.0 * q));
    }
    return total;
}

double conditional_entropy(const BlochForm &f, const Vec3 &n, Side measured) {
    if (measured == Side::B) return conditional_entropy(f.a, f.t_times(n), dot(f.b, n));
    return conditional_entropy(f.b, f.t_transpose_times(n), dot(f.a, n));
}

double joint_entropy(double an, double bm, double ntm) {
    double h = 0.0;
    for (double s : {1.0, -1.0})
        for (double t : {1.0, -1.0}) h -= xlog2x(0.25 * (1.0 + s * an + t * bm + s * t * ntm));
    return h;
}

double clamp_roundoff(double v, const char *what) {
    if (v >= 0.0) return v;
    if (v >= -kRoundoffClamp) return 0.0;
    std::ostringstream os;
    os << what << " is negative beyond roundoff: " << v;
    throw std::logic_error(os.str());
}

// Upper-hemisphere grid, theta-major so that index order matches the
// (smallest theta, then smallest phi) tie-break.
struct HemisphereGrid {
    int n_phi, n_theta;
    double d_theta() const { return n_theta > 1 ? (std::numbers::pi / 2) / (n_theta - 1) : 0.1; }
    double d_phi() const { return 2.0 * std::numbers::pi / n_phi; }
    std::size_t size() const { return static_cast<std::size_t>(n_phi) * n_theta; }
    MeasurementBasis at(std::size_t idx) const {
        const auto it = static_cast<int>(idx / n_phi);
        const auto ip = static_cast<int>(idx % n_phi);
        return {it * d_theta(), ip * d_phi()};
    }
};

GridArgmax scan(std::size_t count, const IndexObjective &f, bool parallel) {
    return parallel ? grid_argmax_parallel(count, f) : grid_argmax_serial(count, f);
}

void check_grid(int n_phi, int n_theta) {
    if (n_phi < 1 || n_theta < 1) throw std::invalid_argument("optimizer grid sizes must be positive");
}

}  // namespace

std::array<double, 3> MeasurementBasis::direction() const { return direction_of(theta, phi); }

CMatrix MeasurementBasis::projector(int outcome) const {
    const auto n = direction();
    const double s = outcome == 0 ? 1.0 : -1.0;
    return (pauli(0) + (pauli(1) * cplx(n[0]) + pauli(2) * cplx(n[1]) + pauli(3) * cplx(n[2])) * cplx(s)) *
           cplx(0.5);
}

MeasurementBasis MeasurementBasis::canonical(double theta, double phi) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    theta = std::fmod(theta, two_pi);
    if (theta < 0.0) theta += two_pi;
    if (theta > std::numbers::pi) {
        theta = two_pi - theta;
        phi += std::numbers::pi;
    }
    phi = std::fmod(phi, two_pi);
    if (phi < 0.0) phi += two_pi;
    if (phi >= two_pi) phi = 0.0;
    return {theta, phi};
}

double shannon_entropy(std::span<const double> dist) {
    double sum = 0.0, h = 0.0;
    for (double p : dist) {
        if (!(p >= 0.0)) throw std::invalid_argument("shannon_entropy: negative probability");
        sum += p;
        h -= xlog2x(p);
    }
    if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("shannon_entropy: probabilities do not sum to 1");
    return h;
}

double von_neumann_entropy(const CMatrix &rho) {
    double h = 0.0;
    for (double lambda : hermitian_eigenvalues(rho)) h -= xlog2x(lambda);
    return h;
}

double von_neumann_entropy(const DensityMatrix &rho) { return von_neumann_entropy(rho.matrix()); }

double mutual_information(const DensityMatrix &rho_ab) {
    if (rho_ab.subsystems() != 2) throw SubsystemError("mutual_information: bipartite state required");
    const double i = von_neumann_entropy(partial_trace(rho_ab, {0})) +
                     von_neumann_entropy(partial_trace(rho_ab, {1})) - von_neumann_entropy(rho_ab);
    if (i < 0.0 && i >= -1e-9) return 0.0;
    return i;
}

double classical_mutual_information(const DensityMatrix &rho_ab, const MeasurementBasis &basis_a,
                                    const MeasurementBasis &basis_b) {
    const BlochForm f(rho_ab);
    const auto n = basis_a.direction();
    const auto m = basis_b.direction();
    const double an = dot(f.a, n), bm = dot(f.b, m), ntm = dot(n, f.t_times(m));
    const double v = binary_entropy(0.5 * (1.0 + an)) + binary_entropy(0.5 * (1.0 + bm)) -
                     joint_entropy(an, bm, ntm);
    return std::max(v, 0.0);
}

double measured_conditional_entropy(const DensityMatrix &rho_ab, const MeasurementBasis &basis,
                                    Side measured) {
    return conditional_entropy(BlochForm(rho_ab), basis.direction(), measured);
}

OneSideResult classical_correlation_hv(const DensityMatrix &rho_ab, Side measured,
                                       const OptimizerSettings &settings) {
    check_grid(settings.one_side_phi, settings.one_side_theta);
    const BlochForm f(rho_ab);
    const double s_unmeasured = qubit_entropy(norm(measured == Side::B ? f.a : f.b));

    const HemisphereGrid grid{settings.one_side_phi, settings.one_side_theta};
    const auto best = scan(
        grid.size(),
        [&](std::size_t idx) {
            const auto b = grid.at(idx);
            return s_unmeasured - conditional_entropy(f, direction_of(b.theta, b.phi), measured);
        },
        settings.parallel);

    const auto start = grid.at(best.index);
    const auto refined = nelder_mead_maximize(
        [&](const std::vector<double> &x) {
            return s_unmeasured - conditional_entropy(f, direction_of(x[0], x[1]), measured);
        },
        {start.theta, start.phi}, {grid.d_theta(), grid.d_phi()}, settings.simplex);

    OneSideResult out;
    out.basis = MeasurementBasis::canonical(refined.x[0], refined.x[1]);
    out.value = clamp_roundoff(std::max(refined.value, best.value), "classical correlation");
    return out;
}

double quantum_discord(const DensityMatrix &rho_ab, Side measured, const OptimizerSettings &settings) {
    const double i = mutual_information(rho_ab);
    const double c = classical_correlation_hv(rho_ab, measured, settings).value;
    return clamp_roundoff(i - c, "quantum discord");
}

TwoSideResult two_side_classical(const DensityMatrix &rho_ab, const OptimizerSettings &settings) {
    check_grid(settings.two_side_phi, settings.two_side_theta);
    const BlochForm f(rho_ab);
    const HemisphereGrid grid{settings.two_side_phi, settings.two_side_theta};
    const std::size_t nd = grid.size();

    // Per-direction pieces: marginal entropies and projections.
    std::vector<Vec3> dirs(nd), t_dirs(nd);
    std::vector<double> an(nd), bm(nd), ha(nd), hb(nd);
    for (std::size_t k = 0; k < nd; ++k) {
        const auto b = grid.at(k);
        dirs[k] = direction_of(b.theta, b.phi);
        t_dirs[k] = f.t_times(dirs[k]);
        an[k] = dot(f.a, dirs[k]);
        bm[k] = dot(f.b, dirs[k]);
        ha[k] = binary_entropy(0.5 * (1.0 + an[k]));
        hb[k] = binary_entropy(0.5 * (1.0 + bm[k]));
    }
    const auto best = scan(
        nd * nd,
        [&](std::size_t idx) {
            const std::size_t ia = idx / nd, ib = idx % nd;
            return ha[ia] + hb[ib] - joint_entropy(an[ia], bm[ib], dot(dirs[ia], t_dirs[ib]));
        },
        settings.parallel);

    auto objective = [&](const std::vector<double> &x) {
        const auto n = direction_of(x[0], x[1]);
        const auto m = direction_of(x[2], x[3]);
        const double pa = dot(f.a, n), pb = dot(f.b, m);
        return binary_entropy(0.5 * (1.0 + pa)) + binary_entropy(0.5 * (1.0 + pb)) -
               joint_entropy(pa, pb, dot(n, f.t_times(m)));
    };
    const auto sa = grid.at(best.index / nd);
    const auto sb = grid.at(best.index % nd);
    const auto refined = nelder_mead_maximize(
        objective, {sa.theta, sa.phi, sb.theta, sb.phi},
        {grid.d_theta(), grid.d_phi(), grid.d_theta(), grid.d_phi()}, settings.simplex);

    TwoSideResult out;
    out.basis_a = MeasurementBasis::canonical(refined.x[0], refined.x[1]);
    out.basis_b = MeasurementBasis::canonical(refined.x[2], refined.x[3]);
    out.value = clamp_roundoff(std::max(refined.value, best.value), "two-side classical correlation");
    return out;
}

double two_side_quantum(const DensityMatrix &rho_ab, const OptimizerSettings &settings) {
    const double i = mutual_information(rho_ab);
    return clamp_roundoff(i - two_side_classical(rho_ab, settings).value, "two-side quantum correlation");
}

bool is_x_form(const CMatrix &rho, double tol) {
    if (rho.dim() != 4) return false;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (j != i && j != 3 - i && std::abs(rho(i, j)) >= tol) return false;
    return true;
}

std::array<double, 2> x_state_lambdas(const CMatrix &rho) {
    auto diag = [&](std::size_t i) { return std::max(rho(i, i).real(), 0.0); };
    return {std::abs(rho(0, 3)) - std::sqrt(diag(1) * diag(2)),
            std::abs(rho(1, 2)) - std::sqrt(diag(0) * diag(3))};
}

double xstate_concurrence(const DensityMatrix &rho) {
    if (!is_x_form(rho.matrix())) {
        throw std::invalid_argument("xstate_concurrence: state is not in X form; use concurrence_general");
    }
    const auto [l1, l2] = x_state_lambdas(rho.matrix());
    return 2.0 * std::max({0.0, l1, l2});
}

double concurrence_general(const DensityMatrix &rho) {
    if (rho.dims() != std::vector<std::size_t>{2, 2}) {
        throw SubsystemError("concurrence: two-qubit state required");
    }
    const CMatrix yy = kron(pauli(2), pauli(2));
    const CMatrix tilde = yy * rho.matrix().conj() * yy;
    const CMatrix m = psd_sqrt(rho.matrix()) * psd_sqrt(tilde);

    // The square roots of eig(sqrt(rho) tilde sqrt(rho)) are the singular
    // values of m, read off as the positive half of the spectrum of the
    // Hermitian embedding [[0, m], [m^dagger, 0]].
    CMatrix h(8);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            h(i, 4 + j) = m(i, j);
            h(4 + j, i) = std::conj(m(i, j));
        }
    const auto ev = hermitian_eigenvalues(h);
    const double c = ev[7] - ev[6] - ev[5] - ev[4];
    return std::max(0.0, c);
}

double concurrence(const DensityMatrix &rho) {
    return is_x_form(rho.matrix()) ? xstate_concurrence(rho) : concurrence_general(rho);
}

double negativity(const DensityMatrix &rho, std::size_t subsystem) {
    double sum = 0.0;
    for (double lambda : hermitian_eigenvalues(partial_transpose(rho, subsystem)))
        if (lambda < -kSpectralNoise) sum -= lambda;
    return sum;
}

std::string_view to_string(Measure m) {
    switch (m) {
        case Measure::MutualInfo:
            return "mutual_info";
        case Measure::ClassicalTwoSide:
            return "classical_two_side";
        case Measure::QuantumTwoSide:
            return "quantum_two_side";
        case Measure::Discord:
            return "discord";
        case Measure::ClassicalHV:
            return "classical_hv";
        case Measure::Concurrence:
            return "concurrence";
        case Measure::Negativity:
            return "negativity";
    }
    return "unknown";
}

std::optional<Measure> parse_measure(std::string_view name) {
    for (Measure m : kAllMeasures)
        if (to_string(m) == name) return m;
    return std::nullopt;
}

CorrelationReport evaluate_report(const DensityMatrix &rho_ab, MeasureSet measures,
                                  const OptimizerSettings &settings) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    CorrelationReport r{nan, nan, nan, nan, nan, nan, nan, {}, {}, {}};

    const bool need_two_side = measures.has(Measure::ClassicalTwoSide) || measures.has(Measure::QuantumTwoSide);
    const bool need_hv = measures.has(Measure::Discord) || measures.has(Measure::ClassicalHV);
    const double mi = mutual_information(rho_ab);
    if (measures.has(Measure::MutualInfo)) r.mutual_info = mi;

    if (need_two_side) {
        const auto k = two_side_classical(rho_ab, settings);
        r.two_side_basis_a = k.basis_a;
        r.two_side_basis_b = k.basis_b;
        // A classical part that overshoots I by roundoff is capped at I so
        // that the split I = K + Q stays exact.
        const double q = clamp_roundoff(mi - k.value, "two-side quantum correlation");
        if (measures.has(Measure::ClassicalTwoSide)) r.classical_two_side = mi - q;
        if (measures.has(Measure::QuantumTwoSide)) r.quantum_two_side = q;
    }
    if (need_hv) {
        const auto c = classical_correlation_hv(rho_ab, Side::B, settings);
        r.hv_basis = c.basis;
        const double d = clamp_roundoff(mi - c.value, "quantum discord");
        if (measures.has(Measure::ClassicalHV)) r.classical_hv_b_measured = mi - d;
        if (measures.has(Measure::Discord)) r.discord_b_measured = d;
    }
    if (measures.has(Measure::Concurrence)) r.concurrence = concurrence(rho_ab);
    if (measures.has(Measure::Negativity)) r.negativity = negativity(rho_ab, 0);
    return r;
}

}  // namespace qdyn
