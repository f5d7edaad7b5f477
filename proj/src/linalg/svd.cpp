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
#include <limits>
#include <numeric>
#include <string>

#include "pptcert/error.hpp"
#include "pptcert/linalg.hpp"
#include "pptcert/simd.hpp"

namespace pptcert {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kZeroRelative = 1e-13;

}  // namespace

// One-sided Jacobi: rotate pairs of columns of M until they are mutually
// orthogonal. Each rotation is the two-sided Hermitian Jacobi step applied
// implicitly to M^dagger M, so small singular values keep absolute accuracy
// ~eps * s_max instead of the sqrt(eps) that squaring would cost.
Svd svd(const ComplexMatrix& m) {
    if (!m.all_finite()) {
        throw Error(ErrorCode::InvalidState, "svd: non-finite entries");
    }
    // Wide input: factor the adjoint so the column count is the short side.
    if (m.cols() > m.rows()) {
        Svd t = svd(m.adjoint());
        std::swap(t.left, t.right);
        return t;
    }
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const std::size_t rank_cap = std::min(rows, cols);

    ComplexMatrix gt = m.transpose();  // row j = column j of M
    ComplexMatrix vt = ComplexMatrix::identity(cols);
    const auto& k = simd::kernels();
    const double orth_tol = 16.0 * std::numeric_limits<double>::epsilon();
    // Columns below this squared norm are numerically zero and never rotated.
    const double negligible = std::pow(std::numeric_limits<double>::epsilon() * m.frobenius_norm(), 2);

    bool converged = cols < 2;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < cols; ++p) {
            for (std::size_t q = p + 1; q < cols; ++q) {
                const double alpha = k.norm_sq(gt.row(p).data(), rows);
                const double beta = k.norm_sq(gt.row(q).data(), rows);
                const cplx gamma = k.dot_conj(gt.row(p).data(), gt.row(q).data(), rows);
                const double mag = std::abs(gamma);
                if (mag == 0.0 || mag <= orth_tol * std::sqrt(alpha * beta) || std::min(alpha, beta) <= negligible) {
                    continue;
                }
                rotated = true;
                const cplx phase = gamma / mag;
                const double theta = (beta - alpha) / (2.0 * mag);
                double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                if (theta < 0.0) {
                    t = -t;
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx phase_conj = std::conj(phase);
                k.rotate_pair(gt.row(p).data(), gt.row(q).data(), c, -s * phase_conj, s, c * phase_conj, rows);
                k.rotate_pair(vt.row(p).data(), vt.row(q).data(), c, -s * phase_conj, s, c * phase_conj, cols);
            }
        }
        converged = !rotated;
    }
    if (!converged) {
        throw Error(ErrorCode::NoConvergence,
                    "svd: columns not orthogonal after " + std::to_string(kMaxSweeps) + " sweeps");
    }

    std::vector<double> norms(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        norms[j] = std::sqrt(k.norm_sq(gt.row(j).data(), rows));
    }
    std::vector<std::size_t> order(cols);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return norms[i] > norms[j]; });

    const double s_max = cols == 0 ? 0.0 : norms[order[0]];
    Svd out;
    out.values.assign(rank_cap, 0.0);
    out.left = ComplexMatrix(rows, rank_cap);
    out.right = ComplexMatrix(cols, rank_cap);
    std::vector<CVector> left_cols;
    for (std::size_t idx = 0; idx < rank_cap; ++idx) {
        const std::size_t j = order[idx];
        for (std::size_t r = 0; r < cols; ++r) {
            out.right(r, idx) = vt(j, r);
        }
        const double sv = norms[j];
        if (sv > kZeroRelative * s_max && sv > 0.0) {
            out.values[idx] = sv;
            CVector u(rows);
            for (std::size_t r = 0; r < rows; ++r) {
                u[r] = gt(j, r) / sv;
            }
            left_cols.push_back(std::move(u));
        }
    }
    // Left vectors of zero singular values: any orthonormal completion.
    if (left_cols.size() < rank_cap) {
        const SubspaceBasis filler = orthogonal_complement(SubspaceBasis(rows, left_cols));
        for (std::size_t i = 0; left_cols.size() < rank_cap; ++i) {
            left_cols.push_back(filler[i]);
        }
    }
    for (std::size_t idx = 0; idx < rank_cap; ++idx) {
        for (std::size_t r = 0; r < rows; ++r) {
            out.left(r, idx) = left_cols[idx][r];
        }
    }
    return out;
}

}  // namespace pptcert
