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

#include "qdyn/matrix.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace qdyn {

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) : dim_(rows.size()) {
    data_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw std::invalid_argument("CMatrix: initializer rows must form a square matrix");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

CMatrix CMatrix::identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::diagonal(std::span<const double> values) {
    CMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

CMatrix CMatrix::transpose() const {
    CMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

CMatrix CMatrix::conj() const {
    CMatrix r(*this);
    for (auto &z : r.data_) z = std::conj(z);
    return r;
}

cplx CMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

CMatrix &CMatrix::operator+=(const CMatrix &o) {
    if (o.dim_ != dim_) throw std::invalid_argument("CMatrix: dimension mismatch in +");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

CMatrix &CMatrix::operator-=(const CMatrix &o) {
    if (o.dim_ != dim_) throw std::invalid_argument("CMatrix: dimension mismatch in -");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

CMatrix &CMatrix::operator*=(cplx s) {
    for (auto &z : data_) z *= s;
    return *this;
}

CMatrix operator*(const CMatrix &a, const CMatrix &b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("CMatrix: dimension mismatch in *");
    const std::size_t n = a.dim_;
    CMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double worst = 0.0;
    auto da = a.data();
    auto db = b.data();
    for (std::size_t k = 0; k < da.size(); ++k) worst = std::max(worst, std::abs(da[k] - db[k]));
    return worst;
}

double hermiticity_defect(const CMatrix &m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = i; j < m.dim(); ++j)
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    return worst;
}

const CMatrix &pauli(int i) {
    static const std::array<CMatrix, 4> table = {
        CMatrix{{1.0, 0.0}, {0.0, 1.0}},
        CMatrix{{0.0, 1.0}, {1.0, 0.0}},
        CMatrix{{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}},
        CMatrix{{1.0, 0.0}, {0.0, -1.0}},
    };
    if (i < 0 || i > 3) throw std::out_of_range("pauli: index must be in 0..3");
    return table[static_cast<std::size_t>(i)];
}

}  // namespace qdyn
