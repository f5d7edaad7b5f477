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

const char* to_string(DecidedBy d) noexcept { return d == DecidedBy::Witness ? "witness" : "spectrum"; }

bool CertifyOutcome::npt() const noexcept {
    if (decided_by == DecidedBy::Witness) {
        return certificate.has_value();
    }
    return spectrum.has_value() && spectrum->label == PptLabel::NPT;
}

SubspaceBasis negative_eigenspace(const DensityMatrix& rho0, const Bipartition& part, double tol) {
    const ComplexMatrix pt = partial_transpose(rho0, part);
    const HermitianEig eig = hermitian_eig(pt);
    const double threshold = negativity_threshold(tol, pt.max_abs());
    std::vector<CVector> vs;
    for (std::size_t i = 0; i < eig.values.size() && eig.values[i] < -threshold; ++i) {
        vs.push_back(eig.vector(i));
    }
    return SubspaceBasis(part.dims().total(), std::move(vs));
}

CVector partially_conjugated(const PureState& chi, const Bipartition& part) {
    const SchmidtDecomposition sd = schmidt_decompose(chi, part);
    if (sd.schmidt_number != 1) {
        throw Error(ErrorCode::NotSeparableInput,
                    "component has Schmidt number " + std::to_string(sd.schmidt_number) + " across the cut");
    }
    CVector out(part.dims().total());
    const double mu = sd.coefficients.front();
    for (std::size_t iy = 0; iy < part.y_dim(); ++iy) {
        const cplx left = mu * std::conj(sd.left[0][iy]);
        for (std::size_t ib = 0; ib < part.ybar_dim(); ++ib) {
            out[part.join(iy, ib)] = left * sd.right[0][ib];
        }
    }
    return out;
}

// Any xi orthogonal to every conj(a_i) (x) b_i has zero weight on the
// separable terms of rho^{T_Y}; if it also lies in V_- the head term is
// negative. Once dim V_- exceeds dim V_s the intersection cannot be trivial.
std::optional<CVector> find_witness(const DensityMatrix& rho0, const std::vector<PureState>& separables,
                                    const Bipartition& part, double tol) {
    if (!(rho0.dims == part.dims())) {
        throw Error(ErrorCode::DimensionMismatch, "find_witness: state and partition dimensions differ");
    }
    const std::size_t n = part.dims().total();
    std::vector<CVector> conjugated;
    conjugated.reserve(separables.size());
    for (const auto& chi : separables) {
        if (!(chi.dims == part.dims())) {
            throw Error(ErrorCode::DimensionMismatch, "find_witness: separable state has different dimensions");
        }
        conjugated.push_back(partially_conjugated(chi, part));
    }

    const SubspaceBasis negative = negative_eigenspace(rho0, part, tol);
    if (negative.empty()) {
        return std::nullopt;
    }
    const SubspaceBasis vs = orthonormal_basis(conjugated, n);
    const SubspaceBasis inter = subspace_intersection(negative, orthogonal_complement(vs));
    if (inter.empty()) {
        return std::nullopt;
    }

    // Minimize the head's quadratic form over the intersection.
    const ComplexMatrix pt = partial_transpose(rho0, part);
    const ComplexMatrix w = inter.as_matrix();
    const ComplexMatrix restricted = w.adjoint() * pt * w;
    const HermitianEig small = hermitian_eig(restricted, 1e-8);
    CVector xi = w * std::span<const cplx>(small.vector(0));

    // The intersection is only accurate to the rank tolerance; put xi back
    // into V_s^perp exactly.
    xi = vs.project_out(xi);
    const double nrm = norm(xi);
    if (nrm < 0.5) {
        return std::nullopt;
    }
    for (auto& z : xi) {
        z /= nrm;
    }
    if (quadratic_form(pt, xi) >= -negativity_threshold(tol, pt.max_abs())) {
        return std::nullopt;
    }
    return xi;
}

CertifyOutcome certify(const MixtureSpec& spec, const Bipartition& part, double tol) {
    validate(spec);
    if (!(spec.dims() == part.dims())) {
        throw Error(ErrorCode::DimensionMismatch, "certify: mixture and partition dimensions differ");
    }
    CertifyOutcome out;
    const DensityMatrix rho0 = head_density(spec.head);
    const ComplexMatrix head_pt = partial_transpose(rho0, part);
    const DensityMatrix rho = mix(spec);

    bool tail_usable = true;
    for (std::size_t i = 1; i <= spec.k(); ++i) {
        tail_usable = tail_usable && spec.flagged_separable(i);
    }

    std::optional<CVector> xi;
    if (tail_usable) {
        out.head_negative_count = negative_eigenspace(rho0, part, tol).dim();
        xi = find_witness(rho0, spec.tail, part, tol);
    }
    if (xi) {
        NptCertificate cert;
        cert.partition = part;
        cert.tolerance = tol;
        cert.per_component.push_back(quadratic_form(head_pt, *xi));
        bool separable_terms_vanish = true;
        for (const auto& chi : spec.tail) {
            const double v = quadratic_form(partial_transpose(to_density(chi), part), *xi);
            cert.per_component.push_back(v);
            separable_terms_vanish = separable_terms_vanish && std::abs(v) <= tol;
        }
        cert.quad_value = quadratic_form(partial_transpose(rho, part), *xi);
        cert.xi = std::move(*xi);
        if (cert.per_component.front() < 0.0 && separable_terms_vanish && cert.quad_value < -tol) {
            out.decided_by = DecidedBy::Witness;
            out.certificate = std::move(cert);
            return out;
        }
    }
    out.decided_by = DecidedBy::Spectrum;
    out.spectrum = classify(rho, part, tol);
    return out;
}

bool certificate_holds(const NptCertificate& cert, const MixtureSpec& spec) {
    if (std::abs(norm(cert.xi) - 1.0) > 1e-12) {
        return false;
    }
    const ComplexMatrix pt = partial_transpose(mix(spec), cert.partition);
    return quadratic_form(pt, cert.xi) < -cert.tolerance;
}

}  // namespace pptcert
