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

#include <string>

#include "pptcert/error.hpp"
#include "pptcert/qstate.hpp"

namespace pptcert {

ComplexMatrix coefficient_matrix(std::span<const cplx> psi, const Bipartition& part) {
    if (psi.size() != part.dims().total()) {
        throw Error(ErrorCode::DimensionMismatch, "state length does not match the partition's dimensions");
    }
    ComplexMatrix m(part.y_dim(), part.ybar_dim());
    for (std::size_t iy = 0; iy < part.y_dim(); ++iy) {
        for (std::size_t ib = 0; ib < part.ybar_dim(); ++ib) {
            m(iy, ib) = psi[part.join(iy, ib)];
        }
    }
    return m;
}

// psi_{y,b} = sum_k s_k u_k[y] conj(v_k[b]), so the Ybar-side frame is the
// conjugate of the SVD's right frame.
SchmidtDecomposition schmidt_decompose(const PureState& psi, const Bipartition& part) {
    if (!(psi.dims == part.dims())) {
        throw Error(ErrorCode::DimensionMismatch, "state and partition have different dimensions");
    }
    const Svd dec = svd(coefficient_matrix(psi.amplitudes, part));
    SchmidtDecomposition out;
    for (std::size_t k = 0; k < dec.values.size() && dec.values[k] > 0.0; ++k) {
        out.coefficients.push_back(dec.values[k]);
        out.left.push_back(dec.left.column(k));
        CVector r = dec.right.column(k);
        for (auto& z : r) {
            z = std::conj(z);
        }
        out.right.push_back(std::move(r));
    }
    for (double mu : out.coefficients) {
        if (mu > kDefaultSchmidtTol * out.coefficients.front()) {
            ++out.schmidt_number;
        }
    }
    return out;
}

std::size_t schmidt_number(const PureState& psi, const Bipartition& part, double tol) {
    const SchmidtDecomposition sd = schmidt_decompose(psi, part);
    std::size_t n = 0;
    for (double mu : sd.coefficients) {
        if (mu > tol * sd.coefficients.front()) {
            ++n;
        }
    }
    return n;
}

CVector reassemble(const SchmidtDecomposition& sd, const Bipartition& part) {
    CVector out(part.dims().total());
    for (std::size_t k = 0; k < sd.coefficients.size(); ++k) {
        for (std::size_t iy = 0; iy < part.y_dim(); ++iy) {
            for (std::size_t ib = 0; ib < part.ybar_dim(); ++ib) {
                out[part.join(iy, ib)] += sd.coefficients[k] * sd.left[k][iy] * sd.right[k][ib];
            }
        }
    }
    return out;
}

}  // namespace pptcert
