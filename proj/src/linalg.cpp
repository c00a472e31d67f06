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

#include "qdyn/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qdyn {

const char *to_string(Violation v) {
    switch (v) {
        case Violation::Hermiticity:
            return "hermiticity";
        case Violation::Trace:
            return "trace";
        case Violation::Positivity:
            return "positivity";
        case Violation::Dimensions:
            return "dimensions";
    }
    return "unknown";
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    const std::size_t na = a.dim(), nb = b.dim();
    CMatrix r(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{}) continue;
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l) r(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return r;
}

namespace {

std::size_t product(std::span<const std::size_t> dims) {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

// Mixed-radix digits of a flat index, factor 0 most significant.
void split_index(std::size_t index, std::span<const std::size_t> dims, std::span<std::size_t> digits) {
    for (std::size_t s = dims.size(); s-- > 0;) {
        digits[s] = index % dims[s];
        index /= dims[s];
    }
}

std::size_t join_index(std::span<const std::size_t> digits, std::span<const std::size_t> dims) {
    std::size_t index = 0;
    for (std::size_t s = 0; s < dims.size(); ++s) index = index * dims[s] + digits[s];
    return index;
}

[[noreturn]] void fail(Violation v, double magnitude, const std::string &msg) {
    std::ostringstream os;
    os.precision(6);
    os << "invalid density matrix (" << to_string(v) << "): " << msg << " [magnitude " << magnitude
       << "]";
    throw InvalidStateError(v, magnitude, os.str());
}

}  // namespace

DensityMatrix validate_density(CMatrix m, std::vector<std::size_t> dims, const Tolerances &tol) {
    if (dims.empty() || product(dims) != m.dim()) {
        fail(Violation::Dimensions, static_cast<double>(m.dim()),
             "subsystem dimensions do not multiply to the matrix size");
    }
    for (const auto &z : m.data()) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            fail(Violation::Hermiticity, std::numeric_limits<double>::infinity(),
                 "non-finite entry");
        }
    }
    const double herm = hermiticity_defect(m);
    if (herm > tol.hermiticity) fail(Violation::Hermiticity, herm, "rho differs from its adjoint");

    // Symmetrize away the sub-tolerance defect so downstream code sees an
    // exactly Hermitian matrix.
    const std::size_t n = m.dim();
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(i, j) = avg;
            m(j, i) = std::conj(avg);
        }
    }

    const double trace_err = std::abs(m.trace().real() - 1.0);
    if (trace_err > tol.trace) fail(Violation::Trace, trace_err, "trace differs from 1");

    const auto eig = hermitian_eigenvalues(m);
    if (eig.front() < -tol.positivity) {
        fail(Violation::Positivity, eig.front(), "negative eigenvalue");
    }
    return DensityMatrix(std::move(m), std::move(dims));
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const std::size_t> keep) {
    const auto &dims = rho.dims();
    const std::size_t ns = dims.size();
    if (keep.empty()) throw SubsystemError("partial_trace: keep set is empty");
    std::vector<bool> kept(ns, false);
    for (std::size_t k : keep) {
        if (k >= ns) throw SubsystemError("partial_trace: subsystem index out of range");
        if (kept[k]) throw SubsystemError("partial_trace: duplicate subsystem index");
        kept[k] = true;
    }

    std::vector<std::size_t> out_dims;
    for (std::size_t s = 0; s < ns; ++s)
        if (kept[s]) out_dims.push_back(dims[s]);
    const std::size_t out_n = product(out_dims);

    CMatrix out(out_n);
    std::vector<std::size_t> ri(ns), ci(ns), ro, co;
    ro.reserve(ns);
    co.reserve(ns);
    const std::size_t n = rho.dim();
    for (std::size_t r = 0; r < n; ++r) {
        split_index(r, dims, ri);
        for (std::size_t c = 0; c < n; ++c) {
            split_index(c, dims, ci);
            bool traced_match = true;
            for (std::size_t s = 0; s < ns && traced_match; ++s)
                if (!kept[s] && ri[s] != ci[s]) traced_match = false;
            if (!traced_match) continue;
            ro.clear();
            co.clear();
            for (std::size_t s = 0; s < ns; ++s)
                if (kept[s]) {
                    ro.push_back(ri[s]);
                    co.push_back(ci[s]);
                }
            out(join_index(ro, out_dims), join_index(co, out_dims)) += rho(r, c);
        }
    }
    return DensityMatrix(std::move(out), std::move(out_dims));
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::initializer_list<std::size_t> keep) {
    return partial_trace(rho, std::span<const std::size_t>(keep.begin(), keep.size()));
}

CMatrix partial_transpose(const CMatrix &m, std::span<const std::size_t> dims, std::size_t subsystem) {
    if (dims.size() != 2) {
        throw SubsystemError("partial_transpose: a bipartite (two-factor) state is required");
    }
    if (subsystem >= 2) throw SubsystemError("partial_transpose: subsystem index out of range");
    if (product(dims) != m.dim()) throw SubsystemError("partial_transpose: dims do not match matrix");

    const std::size_t n = m.dim();
    CMatrix out(n);
    std::size_t ri[2], ci[2];
    for (std::size_t r = 0; r < n; ++r) {
        split_index(r, dims, ri);
        for (std::size_t c = 0; c < n; ++c) {
            split_index(c, dims, ci);
            std::swap(ri[subsystem], ci[subsystem]);
            out(join_index(ri, dims), join_index(ci, dims)) = m(r, c);
            std::swap(ri[subsystem], ci[subsystem]);
        }
    }
    return out;
}

CMatrix partial_transpose(const DensityMatrix &rho, std::size_t subsystem) {
    return partial_transpose(rho.matrix(), rho.dims(), subsystem);
}

EigenDecomposition hermitian_eigen(const CMatrix &m) {
    const double defect = hermiticity_defect(m);
    if (defect > 1e-10) {
        throw NotHermitianError(defect, "hermitian_eigen: input is not Hermitian");
    }
    const std::size_t n = m.dim();
    CMatrix a = m;
    CMatrix v = CMatrix::identity(n);

    double frob = 0.0;
    for (const auto &z : a.data()) frob += std::norm(z);
    const double stop = 1e-13 * std::max(1.0, std::sqrt(frob));

    constexpr int kMaxSweeps = 64;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * std::norm(a(i, j));
        if (std::sqrt(off) < stop) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double g = std::abs(a(p, q));
                if (g == 0.0) continue;
                const cplx w = a(p, q) / g;
                const double app = a(p, p).real(), aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * g);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // A <- A J with J = [[c, s w], [-s conj(w), c]] on (p, q).
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * std::conj(w) * akq;
                    a(k, q) = s * w * akp + c * akq;
                }
                // A <- J^dagger A
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * w * aqk;
                    a(q, k) = s * std::conj(w) * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = app - t * g;
                a(q, q) = aqq + t * g;

                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * std::conj(w) * vkq;
                    v(k, q) = s * w * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors = CMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const CMatrix &m) { return hermitian_eigen(m).values; }

CMatrix psd_sqrt(const CMatrix &m) {
    const auto eig = hermitian_eigen(m);
    const std::size_t n = m.dim();
    if (eig.values.front() < -kClampFloor) {
        throw InvalidStateError(Violation::Positivity, eig.values.front(),
                                "psd_sqrt: matrix has a negative eigenvalue");
    }
    double radius = 0.0;
    for (double x : eig.values) radius = std::max(radius, std::abs(x));
    const double floor = kSpectralNoise * radius;

    CMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double mu = eig.values[k];
        if (mu <= floor) continue;
        const double root = std::sqrt(mu);
        for (std::size_t i = 0; i < n; ++i) {
            const cplx vi = eig.vectors(i, k) * root;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += vi * std::conj(eig.vectors(j, k));
        }
    }
    return out;
}

}  // namespace qdyn
