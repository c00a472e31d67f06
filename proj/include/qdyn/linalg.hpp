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

#ifndef QDYN_LINALG_HPP
#define QDYN_LINALG_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdyn/matrix.hpp"

namespace qdyn {

/// Acceptance thresholds for a density matrix.
struct Tolerances {
    double hermiticity = 1e-12;  // max |rho - rho^dagger| entry
    double trace = 1e-12;        // |Tr rho - 1|
    double positivity = 1e-10;   // smallest eigenvalue may dip this far below 0
};

enum class Violation { Hermiticity, Trace, Positivity, Dimensions };

const char *to_string(Violation v);

/// Raised when a matrix fails one of the density-matrix invariants.
/// `magnitude()` is the size of the violation (entry defect, trace error or
/// the offending eigenvalue).
class InvalidStateError : public std::runtime_error {
   public:
    InvalidStateError(Violation v, double magnitude, const std::string &what)
        : std::runtime_error(what), violation_(v), magnitude_(magnitude) {}
    Violation violation() const { return violation_; }
    double magnitude() const { return magnitude_; }

   private:
    Violation violation_;
    double magnitude_;
};

/// Misconfigured bipartition or subsystem selection.
class SubsystemError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Input to an eigen routine was not Hermitian.
class NotHermitianError : public std::invalid_argument {
   public:
    NotHermitianError(double defect, const std::string &what)
        : std::invalid_argument(what), defect_(defect) {}
    double defect() const { return defect_; }

   private:
    double defect_;
};

/// A validated quantum state together with its tensor-factor dimensions.
/// Factor 0 is the leftmost in the Kronecker product.
class DensityMatrix {
   public:
    const CMatrix &matrix() const { return matrix_; }
    const std::vector<std::size_t> &dims() const { return dims_; }
    std::size_t dim() const { return matrix_.dim(); }
    std::size_t subsystems() const { return dims_.size(); }
    const cplx &operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }

   private:
    DensityMatrix(CMatrix m, std::vector<std::size_t> dims)
        : matrix_(std::move(m)), dims_(std::move(dims)) {}

    friend DensityMatrix validate_density(CMatrix, std::vector<std::size_t>, const Tolerances &);
    friend DensityMatrix partial_trace(const DensityMatrix &, std::span<const std::size_t>);

    CMatrix matrix_;
    std::vector<std::size_t> dims_;
};

/// Entry ((i*b.dim+k), (j*b.dim+l)) = a(i,j) * b(k,l).
CMatrix kron(const CMatrix &a, const CMatrix &b);

/// Checks Hermiticity, unit trace and positivity (in that order) and
/// returns the validated state. Entries within tolerance of Hermitian are
/// symmetrized.
DensityMatrix validate_density(CMatrix m, std::vector<std::size_t> dims,
                               const Tolerances &tol = {});

/// Reduced state on the subsystems listed in `keep`; the result keeps
/// their original relative order.
DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const std::size_t> keep);
DensityMatrix partial_trace(const DensityMatrix &rho, std::initializer_list<std::size_t> keep);

/// Partial transpose of a bipartite state on the given factor.
CMatrix partial_transpose(const DensityMatrix &rho, std::size_t subsystem);
/// Same, for a raw matrix with explicit factor dimensions.
CMatrix partial_transpose(const CMatrix &m, std::span<const std::size_t> dims,
                          std::size_t subsystem);

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    CMatrix vectors;             // column k is the eigenvector of values[k]
};

/// Cyclic Jacobi eigensolver for Hermitian matrices. Diagonal input is
/// returned untouched (up to sorting).
EigenDecomposition hermitian_eigen(const CMatrix &m);
std::vector<double> hermitian_eigenvalues(const CMatrix &m);

/// Principal square root of a positive semidefinite matrix. Eigenvalues in
/// [-1e-10, 0) and numerical zeros are clamped to 0.
CMatrix psd_sqrt(const CMatrix &m);

/// Eigenvalues whose magnitude is below this floor relative to the
/// spectral radius are roundoff.
inline constexpr double kSpectralNoise = 1e-14;
/// Eigenvalues in [-kClampFloor, 0) count as zero; below it they are errors.
inline constexpr double kClampFloor = 1e-10;

}  // namespace qdyn

#endif  // QDYN_LINALG_HPP
