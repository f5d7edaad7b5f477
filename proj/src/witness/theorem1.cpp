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

#include <cmath>
#include <string>

#include "pptcert/error.hpp"
#include "pptcert/witness.hpp"

namespace pptcert {

namespace {

// Unitary whose first rows are frame[i]^dagger, so it maps frame[i] to |i>.
ComplexMatrix rotation_onto_basis(const std::vector<CVector>& frame, std::size_t dim) {
    const SubspaceBasis head(dim, frame);
    const SubspaceBasis rest = orthogonal_complement(head);
    ComplexMatrix u(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const CVector& row = i < frame.size() ? frame[i] : rest[i - frame.size()];
        for (std::size_t c = 0; c < dim; ++c) {
            u(i, c) = std::conj(row[c]);
        }
    }
    return u;
}

}  // namespace

Theorem1Reduction theorem1_reduce(const PureState& chi0, const PureState& chi1, double lambda0, double lambda1) {
    if (chi0.dims.subsystems() != 2 || !(chi0.dims == chi1.dims)) {
        throw Error(ErrorCode::DimensionMismatch, "theorem1_reduce needs two states on the same two-party system");
    }
    const Bipartition cut = Bipartition::first_of(chi0.dims);
    const std::size_t da = chi0.dims[0];
    const std::size_t db = chi0.dims[1];

    const SchmidtDecomposition s0 = schmidt_decompose(chi0, cut);
    if (s0.schmidt_number != 2) {
        throw Error(ErrorCode::WrongSchmidtNumber,
                    "chi0 has Schmidt number " + std::to_string(s0.schmidt_number) + ", need 2");
    }
    const SchmidtDecomposition s1 = schmidt_decompose(chi1, cut);
    if (s1.schmidt_number != 1) {
        throw Error(ErrorCode::NotProduct, "chi1 has Schmidt number " + std::to_string(s1.schmidt_number));
    }

    Theorem1Reduction red;
    red.mu1 = s0.coefficients[0];
    red.mu2 = s0.coefficients[1];
    red.u = rotation_onto_basis({s0.left[0], s0.left[1]}, da);
    red.v = rotation_onto_basis({s0.right[0], s0.right[1]}, db);

    CVector x = s1.left[0];
    for (auto& z : x) {
        z *= s1.coefficients[0];
    }
    const CVector ux = red.u * std::span<const cplx>(x);
    const CVector vy = red.v * std::span<const cplx>(s1.right[0]);
    red.a = ux[0];
    red.b = ux[1];
    red.c = vy[0];
    red.d = vy[1];
    const double ab = std::norm(red.a) + std::norm(red.b);
    const double cd = std::norm(red.c) + std::norm(red.d);
    red.projection_lost_norm = ab < 1.0 - 1e-12 || cd < 1.0 - 1e-12;

    ComplexMatrix rho = lambda0 * ComplexMatrix::outer(chi0.amplitudes, chi0.amplitudes);
    rho += lambda1 * ComplexMatrix::outer(chi1.amplitudes, chi1.amplitudes);
    const ComplexMatrix w = kron(red.u, red.v);
    const ComplexMatrix rotated = w * rho * w.adjoint();
    red.rho_tilde = ComplexMatrix(4, 4);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < 2; ++k) {
                for (std::size_t l = 0; l < 2; ++l) {
                    red.rho_tilde(2 * i + j, 2 * k + l) = rotated(i * db + j, k * db + l);
                }
            }
        }
    }
    return red;
}

double theorem1_det(const Theorem1Reduction& red, double lambda0, double lambda1) {
    const double m1 = red.mu1;
    const double m2 = red.mu2;
    const double l0_3 = lambda0 * lambda0 * lambda0;
    const double mm = m1 * m1 * m2 * m2;
    const double cross = std::norm(m1 * red.b * red.d + m2 * red.a * red.c);
    return -l0_3 * lambda0 * mm * mm - lambda1 * l0_3 * mm * cross;
}

double theorem1_numeric_det(const Theorem1Reduction& red) {
    const Bipartition qubits = Bipartition::first_of(DimsSpec({2, 2}));
    return determinant(partial_transpose(red.rho_tilde, qubits)).real();
}

}  // namespace pptcert
