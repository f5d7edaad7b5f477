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
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <tuple>
#include <vector>

namespace pptcert {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

/// Rank and intersection threshold shared by the subspace routines.
inline constexpr double kDefaultRankTol = 1e-9;

/// Dense complex matrix, row-major: entry (r, c) lives at r * cols() + c.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix outer(std::span<const cplx> x, std::span<const cplx> y);  // x y^dagger
    /// Columns are the given vectors.
    static ComplexMatrix from_columns(std::span<const CVector> columns, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    cplx& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<cplx> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<const cplx> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    CVector column(std::size_t c) const;

    const std::vector<cplx>& entries() const noexcept { return data_; }
    std::vector<cplx>& entries() noexcept { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    cplx trace() const;
    double max_abs() const noexcept;
    double frobenius_norm() const noexcept;
    bool all_finite() const noexcept;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx scale) noexcept;

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx scale, ComplexMatrix m);
CVector operator*(const ComplexMatrix& a, std::span<const cplx> x);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |a_ij - b_ij|; shapes must match.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |m_ij - conj(m_ji)|
double hermiticity_defect(const ComplexMatrix& m);

cplx dot(std::span<const cplx> x, std::span<const cplx> y);  // x^dagger y
double norm(std::span<const cplx> x);
/// <x| m |x> for Hermitian m, real part.
double quadratic_form(const ComplexMatrix& m, std::span<const cplx> x);

/// Determinant by LU with partial pivoting.
cplx determinant(ComplexMatrix m);

struct HermitianEig {
    std::vector<double> values;  ///< ascending
    ComplexMatrix vectors;       ///< column k pairs with values[k]

    CVector vector(std::size_t k) const { return vectors.column(k); }
};

/// Full spectrum of a Hermitian matrix by cyclic complex Jacobi.
/// Throws NotHermitian when ||M - M^dagger||_max > tol * (1 + ||M||_max) and
/// NoConvergence after 100 sweeps.
HermitianEig hermitian_eig(const ComplexMatrix& m, double tol = 1e-10);

struct Svd {
    ComplexMatrix left;           ///< rows x k, orthonormal columns
    std::vector<double> values;   ///< k = min(rows, cols), descending
    ComplexMatrix right;          ///< cols x k, orthonormal columns
};

/// Thin SVD, m = sum_k s_k u_k v_k^dagger, by one-sided (Hestenes) Jacobi.
/// Singular values below 1e-13 * s_max are reported as exactly zero.
Svd svd(const ComplexMatrix& m);

/// Orthonormal vectors spanning a subspace of C^ambient_dim.
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    /// Takes vectors that are already orthonormal; only shapes are checked.
    SubspaceBasis(std::size_t ambient_dim, std::vector<CVector> vectors);

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t dim() const noexcept { return vectors_.size(); }
    bool empty() const noexcept { return vectors_.empty(); }
    const std::vector<CVector>& vectors() const noexcept { return vectors_; }
    const CVector& operator[](std::size_t i) const noexcept { return vectors_[i]; }

    ComplexMatrix as_matrix() const;  ///< ambient_dim x dim
    ComplexMatrix projector() const;
    /// x minus its component inside the subspace.
    CVector project_out(std::span<const cplx> x) const;

private:
    std::size_t ambient_dim_ = 0;
    std::vector<CVector> vectors_;
};

/// Orthonormal basis of span(vs). Directions whose singular value falls at
/// or below rank_tol times the largest input norm are dropped.
SubspaceBasis orthonormal_basis(std::span<const CVector> vs, std::size_t ambient_dim,
                                double rank_tol = kDefaultRankTol);

SubspaceBasis orthogonal_complement(const SubspaceBasis& b);

/// A ∩ B as the eigenspace of P_A P_B P_A with eigenvalue >= 1 - tol.
SubspaceBasis subspace_intersection(const SubspaceBasis& a, const SubspaceBasis& b,
                                    double tol = kDefaultRankTol);

}  // namespace pptcert
