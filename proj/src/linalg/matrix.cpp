// Copyright 2026 The pptcert Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <string>

#include "pptcert/error.hpp"
#include "pptcert/linalg.hpp"
#include "pptcert/simd.hpp"

namespace pptcert {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(op) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                        std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw Error(ErrorCode::DimensionMismatch, "entry count " + std::to_string(data_.size()) + " != " +
                                                      std::to_string(rows) + "x" + std::to_string(cols));
    }
    if (!all_finite()) {
        throw Error(ErrorCode::InvalidState, "matrix has non-finite entries");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const cplx> x, std::span<const cplx> y) {
    ComplexMatrix m(x.size(), y.size());
    for (std::size_t r = 0; r < x.size(); ++r) {
        for (std::size_t c = 0; c < y.size(); ++c) {
            m(r, c) = x[r] * std::conj(y[c]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::from_columns(std::span<const CVector> columns, std::size_t rows) {
    ComplexMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) {
            throw Error(ErrorCode::DimensionMismatch, "column length differs from row count");
        }
        for (std::size_t r = 0; r < rows; ++r) {
            m(r, c) = columns[c][r];
        }
    }
    return m;
}

CVector ComplexMatrix::column(std::size_t c) const {
    CVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = std::conj((*this)(r, c));
        }
    }
    return t;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix t = *this;
    for (auto& z : t.data_) {
        z = std::conj(z);
    }
    return t;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::max_abs() const noexcept {
    double m = 0.0;
    for (const auto& z : data_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

double ComplexMatrix::frobenius_norm() const noexcept {
    return std::sqrt(simd::kernels().norm_sq(data_.data(), data_.size()));
}

bool ComplexMatrix::all_finite() const noexcept {
    return std::all_of(data_.begin(), data_.end(),
                       [](const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "operator+=");
    simd::kernels().axpy(data_.data(), other.data_.data(), 1.0, data_.size());
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "operator-=");
    simd::kernels().axpy(data_.data(), other.data_.data(), -1.0, data_.size());
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scale) noexcept {
    for (auto& z : data_) {
        z *= scale;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix product: inner dimensions differ");
    }
    const auto& k = simd::kernels();
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx* out_row = out.row(i).data();
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij != cplx{}) {
                k.axpy(out_row, b.row(j).data(), aij, b.cols());
            }
        }
    }
    return out;
}

ComplexMatrix operator*(cplx scale, ComplexMatrix m) { return m *= scale; }

CVector operator*(const ComplexMatrix& a, std::span<const cplx> x) {
    if (a.cols() != x.size()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix-vector product: length mismatch");
    }
    // Row r of a times x = conj(conj(row) . x); cheaper to spell it out.
    CVector y(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        cplx acc = 0.0;
        const auto row = a.row(r);
        for (std::size_t c = 0; c < x.size(); ++c) {
            acc += row[c] * x[c];
        }
        y[r] = acc;
    }
    return y;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const cplx s = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return m;
}

double hermiticity_defect(const ComplexMatrix& m) {
    if (!m.square()) {
        throw Error(ErrorCode::DimensionMismatch, "hermiticity_defect: matrix not square");
    }
    double d = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = r; c < m.cols(); ++c) {
            d = std::max(d, std::abs(m(r, c) - std::conj(m(c, r))));
        }
    }
    return d;
}

cplx dot(std::span<const cplx> x, std::span<const cplx> y) {
    if (x.size() != y.size()) {
        throw Error(ErrorCode::DimensionMismatch, "dot: length mismatch");
    }
    return simd::kernels().dot_conj(x.data(), y.data(), x.size());
}

double norm(std::span<const cplx> x) { return std::sqrt(simd::kernels().norm_sq(x.data(), x.size())); }

double quadratic_form(const ComplexMatrix& m, std::span<const cplx> x) {
    const CVector mx = m * x;
    return dot(x, mx).real();
}

cplx determinant(ComplexMatrix m) {
    if (!m.square()) {
        throw Error(ErrorCode::DimensionMismatch, "determinant: matrix not square");
    }
    const std::size_t n = m.rows();
    cplx det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t r = k + 1; r < n; ++r) {
            if (std::abs(m(r, k)) > std::abs(m(pivot, k))) {
                pivot = r;
            }
        }
        if (m(pivot, k) == cplx{}) {
            return 0.0;
        }
        if (pivot != k) {
            std::swap_ranges(m.row(k).begin(), m.row(k).end(), m.row(pivot).begin());
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            const cplx f = m(r, k) / m(k, k);
            for (std::size_t c = k; c < n; ++c) {
                m(r, c) -= f * m(k, c);
            }
        }
    }
    return det;
}

}  // namespace pptcert
