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
#include <numeric>
#include <string>

#include "pptcert/error.hpp"
#include "pptcert/linalg.hpp"
#include "pptcert/simd.hpp"

namespace pptcert {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTol = 1e-14;

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (r != c) {
                s += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(s);
}

}  // namespace

// Cyclic Jacobi with complex plane rotations. For the pivot a_pq = |a_pq| e^{i phi}
// the 2x2 unitary
//
//     W = [ c              s            ]
//         [ -s e^{-i phi}  c e^{-i phi} ]
//
// annihilates a_pq in W^dagger A W, with (c, s) the classical real Jacobi pair
// for the block [[a_pp, |a_pq|], [|a_pq|, a_qq]]. Rows p and q are rotated
// with the vector kernel; Hermiticity then fixes columns p and q. The
// eigenvector matrix is kept transposed so its update is also a row rotation.
HermitianEig hermitian_eig(const ComplexMatrix& m, double tol) {
    if (!m.square()) {
        throw Error(ErrorCode::DimensionMismatch, "hermitian_eig: matrix is not square");
    }
    const double defect = hermiticity_defect(m);
    const double scale = m.max_abs();
    if (defect > tol * (1.0 + scale)) {
        throw Error(ErrorCode::NotHermitian, "hermitian_eig: ||M - M^dagger||_max = " + std::to_string(defect));
    }

    const std::size_t n = m.rows();
    ComplexMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        a(r, r) = m(r, r).real();
        for (std::size_t c = r + 1; c < n; ++c) {
            const cplx v = 0.5 * (m(r, c) + std::conj(m(c, r)));
            a(r, c) = v;
            a(c, r) = std::conj(v);
        }
    }
    ComplexMatrix vt = ComplexMatrix::identity(n);
    const auto& k = simd::kernels();

    const double threshold = kOffDiagonalTol * a.frobenius_norm();
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= threshold) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double mag = std::abs(a(p, q));
                if (mag == 0.0) {
                    continue;
                }
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // Past the first sweeps a pivot that cannot move either
                // diagonal entry is rounding noise.
                if (sweep > 3 && std::abs(app) + 100.0 * mag == std::abs(app) &&
                    std::abs(aqq) + 100.0 * mag == std::abs(aqq)) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                const cplx phase = a(p, q) / mag;  // e^{i phi}
                const double theta = (aqq - app) / (2.0 * mag);
                double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                if (theta < 0.0) {
                    t = -t;
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Rows of W^dagger A.
                k.rotate_pair(a.row(p).data(), a.row(q).data(), c, -s * phase, s, c * phase, n);
                for (std::size_t j = 0; j < n; ++j) {
                    if (j != p && j != q) {
                        a(j, p) = std::conj(a(p, j));
                        a(j, q) = std::conj(a(q, j));
                    }
                }
                a(p, p) = app - t * mag;
                a(q, q) = aqq + t * mag;
                a(p, q) = 0.0;
                a(q, p) = 0.0;

                // Columns of V W, stored as rows of V^T.
                const cplx phase_conj = std::conj(phase);
                k.rotate_pair(vt.row(p).data(), vt.row(q).data(), c, -s * phase_conj, s, c * phase_conj, n);
            }
        }
    }
    if (!converged && off_diagonal_norm(a) > threshold) {
        throw Error(ErrorCode::NoConvergence, "hermitian_eig: no convergence after " + std::to_string(kMaxSweeps) +
                                                  " sweeps (n = " + std::to_string(n) + ")");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    HermitianEig out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t src = order[col];
        out.values[col] = a(src, src).real();
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, col) = vt(src, r);
        }
    }
    return out;
}

}  // namespace pptcert
