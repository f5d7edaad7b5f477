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

SubspaceBasis::SubspaceBasis(std::size_t ambient_dim, std::vector<CVector> vectors)
    : ambient_dim_(ambient_dim), vectors_(std::move(vectors)) {
    if (vectors_.size() > ambient_dim_) {
        throw Error(ErrorCode::DimensionMismatch, "subspace basis has more vectors than the ambient dimension");
    }
    for (const auto& v : vectors_) {
        if (v.size() != ambient_dim_) {
            throw Error(ErrorCode::DimensionMismatch, "basis vector length " + std::to_string(v.size()) +
                                                          " != ambient dimension " + std::to_string(ambient_dim_));
        }
    }
}

ComplexMatrix SubspaceBasis::as_matrix() const { return ComplexMatrix::from_columns(vectors_, ambient_dim_); }

ComplexMatrix SubspaceBasis::projector() const {
    ComplexMatrix p(ambient_dim_, ambient_dim_);
    for (const auto& v : vectors_) {
        p += ComplexMatrix::outer(v, v);
    }
    return p;
}

CVector SubspaceBasis::project_out(std::span<const cplx> x) const {
    if (x.size() != ambient_dim_) {
        throw Error(ErrorCode::DimensionMismatch, "project_out: length mismatch");
    }
    CVector r(x.begin(), x.end());
    const auto& k = simd::kernels();
    // Two Gram-Schmidt passes.
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& v : vectors_) {
            const cplx c = k.dot_conj(v.data(), r.data(), ambient_dim_);
            k.axpy(r.data(), v.data(), -c, ambient_dim_);
        }
    }
    return r;
}

SubspaceBasis orthonormal_basis(std::span<const CVector> vs, std::size_t ambient_dim, double rank_tol) {
    if (vs.empty()) {
        return SubspaceBasis(ambient_dim, {});
    }
    double largest = 0.0;
    for (const auto& v : vs) {
        if (v.size() != ambient_dim) {
            throw Error(ErrorCode::DimensionMismatch, "orthonormal_basis: vectors do not share the ambient dimension");
        }
        largest = std::max(largest, norm(v));
    }
    if (largest == 0.0) {
        return SubspaceBasis(ambient_dim, {});
    }
    const Svd dec = svd(ComplexMatrix::from_columns(vs, ambient_dim));
    std::vector<CVector> basis;
    for (std::size_t i = 0; i < dec.values.size(); ++i) {
        if (dec.values[i] > rank_tol * largest) {
            basis.push_back(dec.left.column(i));
        }
    }
    return SubspaceBasis(ambient_dim, std::move(basis));
}

SubspaceBasis orthogonal_complement(const SubspaceBasis& b) {
    const std::size_t n = b.ambient_dim();
    const std::size_t want = n - b.dim();
    if (want == 0) {
        return SubspaceBasis(n, {});
    }
    ComplexMatrix q = ComplexMatrix::identity(n) - b.projector();
    const HermitianEig eig = hermitian_eig(q, 1e-8);
    // Eigenvalues of I - P_B are 0 or 1; take the top n - dim B.
    std::vector<CVector> out;
    out.reserve(want);
    for (std::size_t i = n - want; i < n; ++i) {
        out.push_back(eig.vector(i));
    }
    return SubspaceBasis(n, std::move(out));
}

SubspaceBasis subspace_intersection(const SubspaceBasis& a, const SubspaceBasis& b, double tol) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw Error(ErrorCode::DimensionMismatch, "subspace_intersection: ambient dimensions differ");
    }
    const std::size_t n = a.ambient_dim();
    if (a.empty() || b.empty()) {
        return SubspaceBasis(n, {});
    }
    const ComplexMatrix pa = a.projector();
    const ComplexMatrix sandwich = pa * b.projector() * pa;
    const HermitianEig eig = hermitian_eig(sandwich, 1e-8);
    std::vector<CVector> out;
    for (std::size_t i = n; i-- > 0;) {
        if (eig.values[i] < 1.0 - tol) {
            break;
        }
        out.push_back(eig.vector(i));
    }
    return SubspaceBasis(n, std::move(out));
}

}  // namespace pptcert
