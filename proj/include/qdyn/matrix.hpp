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

#ifndef QDYN_MATRIX_HPP
#define QDYN_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qdyn {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major. Carrier for every operator and
/// state in the library (dims 2, 4, 8 and 16 in practice).
class CMatrix {
   public:
    CMatrix() = default;
    explicit CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
    CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static CMatrix identity(std::size_t dim);
    static CMatrix diagonal(std::span<const double> values);

    std::size_t dim() const { return dim_; }

    cplx &operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const cplx &operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    std::span<cplx> data() { return data_; }
    std::span<const cplx> data() const { return data_; }

    CMatrix adjoint() const;
    CMatrix transpose() const;
    CMatrix conj() const;
    cplx trace() const;

    CMatrix &operator+=(const CMatrix &o);
    CMatrix &operator-=(const CMatrix &o);
    CMatrix &operator*=(cplx s);

    friend CMatrix operator+(CMatrix a, const CMatrix &b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix &b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
    friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
    friend CMatrix operator*(const CMatrix &a, const CMatrix &b);

    bool operator==(const CMatrix &o) const = default;

   private:
    std::size_t dim_ = 0;
    std::vector<cplx> data_;
};

/// Largest entrywise modulus of a - b. Dimensions must agree.
double max_abs_diff(const CMatrix &a, const CMatrix &b);

/// Largest entrywise modulus of m - m^dagger.
double hermiticity_defect(const CMatrix &m);

/// Pauli matrices; index 0 is the identity, 1..3 are x, y, z.
const CMatrix &pauli(int i);

}  // namespace qdyn

#endif  // QDYN_MATRIX_HPP
