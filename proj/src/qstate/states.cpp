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
#include "pptcert/qstate.hpp"

namespace pptcert {

namespace {

constexpr double kRenormWarn = 1e-8;
constexpr double kDensityHermTol = 1e-12;
constexpr double kDensityTraceTol = 1e-12;
constexpr double kDensityMinEig = -1e-10;
constexpr double kWeightSumTol = 1e-12;

// Adds w |x><x| keeping the result exactly Hermitian.
void add_projector(ComplexMatrix& m, std::span<const cplx> x, double w) {
    for (std::size_t r = 0; r < x.size(); ++r) {
        m(r, r) += w * std::norm(x[r]);
        for (std::size_t c = r + 1; c < x.size(); ++c) {
            const cplx v = w * x[r] * std::conj(x[c]);
            m(r, c) += v;
            m(c, r) += std::conj(v);
        }
    }
}

}  // namespace

const DimsSpec& MixtureSpec::dims() const {
    return std::visit([](const auto& h) -> const DimsSpec& { return h.dims; }, head);
}

bool MixtureSpec::flagged_separable(std::size_t component) const {
    if (!separable_flags.empty()) {
        return separable_flags.at(component);
    }
    return component != 0;
}

PureState make_pure(std::span<const cplx> amps, const DimsSpec& dims) {
    if (amps.size() != dims.total()) {
        throw Error(ErrorCode::DimensionMismatch, "state has " + std::to_string(amps.size()) +
                                                      " amplitudes, dimensions need " + std::to_string(dims.total()));
    }
    for (const auto& a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw Error(ErrorCode::InvalidState, "state has non-finite amplitudes");
        }
    }
    const double nrm = norm(amps);
    if (nrm == 0.0) {
        throw Error(ErrorCode::ZeroVector, "cannot normalize the zero vector");
    }
    PureState out{dims, CVector(amps.begin(), amps.end()), std::abs(nrm - 1.0) > kRenormWarn};
    for (auto& a : out.amplitudes) {
        a /= nrm;
    }
    return out;
}

PureState product_pure(std::span<const cplx> factor_y, std::span<const cplx> factor_ybar, const Bipartition& part) {
    if (factor_y.size() != part.y_dim() || factor_ybar.size() != part.ybar_dim()) {
        throw Error(ErrorCode::DimensionMismatch, "product factors have lengths " + std::to_string(factor_y.size()) +
                                                      ", " + std::to_string(factor_ybar.size()) + "; cut needs " +
                                                      std::to_string(part.y_dim()) + ", " +
                                                      std::to_string(part.ybar_dim()));
    }
    CVector amps(part.dims().total());
    for (std::size_t iy = 0; iy < factor_y.size(); ++iy) {
        for (std::size_t ib = 0; ib < factor_ybar.size(); ++ib) {
            amps[part.join(iy, ib)] = factor_y[iy] * factor_ybar[ib];
        }
    }
    return make_pure(amps, part.dims());
}

PureState fully_separable(std::span<const CVector> factors, const DimsSpec& dims) {
    if (factors.size() != dims.subsystems()) {
        throw Error(ErrorCode::DimensionMismatch, "need one factor per subsystem");
    }
    CVector amps{1.0};
    for (std::size_t s = 0; s < factors.size(); ++s) {
        if (factors[s].size() != dims[s]) {
            throw Error(ErrorCode::DimensionMismatch, "factor " + std::to_string(s) + " has wrong length");
        }
        CVector next;
        next.reserve(amps.size() * dims[s]);
        for (const auto& a : amps) {
            for (const auto& f : factors[s]) {
                next.push_back(a * f);
            }
        }
        amps = std::move(next);
    }
    return make_pure(amps, dims);
}

DensityMatrix make_density(const ComplexMatrix& m, const DimsSpec& dims) {
    if (m.rows() != dims.total() || m.cols() != dims.total()) {
        throw Error(ErrorCode::DimensionMismatch, "density matrix is " + std::to_string(m.rows()) + "x" +
                                                      std::to_string(m.cols()) + ", dimensions need " +
                                                      std::to_string(dims.total()));
    }
    if (!m.all_finite()) {
        throw Error(ErrorCode::InvalidState, "density matrix has non-finite entries");
    }
    const double herm = hermiticity_defect(m);
    if (herm > kDensityHermTol) {
        throw Error(ErrorCode::InvalidState, "density matrix not Hermitian (defect " + std::to_string(herm) + ")");
    }
    const cplx tr = m.trace();
    if (std::abs(tr - 1.0) > kDensityTraceTol) {
        throw Error(ErrorCode::InvalidState, "density matrix trace is not 1");
    }
    const HermitianEig eig = hermitian_eig(m, kDensityHermTol);
    if (eig.values.front() < kDensityMinEig) {
        throw Error(ErrorCode::InvalidState,
                    "density matrix not positive (min eigenvalue " + std::to_string(eig.values.front()) + ")");
    }
    return DensityMatrix{dims, m};
}

DensityMatrix to_density(const PureState& psi) {
    ComplexMatrix m(psi.amplitudes.size(), psi.amplitudes.size());
    add_projector(m, psi.amplitudes, 1.0);
    return DensityMatrix{psi.dims, std::move(m)};
}

DensityMatrix head_density(const MixtureHead& head) {
    if (const auto* pure = std::get_if<PureState>(&head)) {
        return to_density(*pure);
    }
    return std::get<DensityMatrix>(head);
}

void validate(const MixtureSpec& spec) {
    if (spec.weights.size() != spec.tail.size() + 1) {
        throw Error(ErrorCode::WeightMismatch, std::to_string(spec.weights.size()) + " weights for " +
                                                   std::to_string(spec.tail.size() + 1) + " components");
    }
    if (!spec.separable_flags.empty() && spec.separable_flags.size() != spec.weights.size()) {
        throw Error(ErrorCode::WeightMismatch, "separable_flags length differs from component count");
    }
    double total = 0.0;
    for (double w : spec.weights) {
        if (!(w > 0.0) || w > 1.0) {
            throw Error(ErrorCode::WeightMismatch, "weight " + std::to_string(w) + " outside (0, 1]");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > kWeightSumTol) {
        throw Error(ErrorCode::WeightMismatch, "weights sum to " + std::to_string(total));
    }
    const DimsSpec& dims = spec.dims();
    for (const auto& c : spec.tail) {
        if (!(c.dims == dims)) {
            throw Error(ErrorCode::DimensionMismatch, "mixture components do not share dimensions");
        }
    }
}

DensityMatrix mix(const MixtureSpec& spec) {
    validate(spec);
    const std::size_t n = spec.dims().total();
    ComplexMatrix m(n, n);
    if (const auto* pure = std::get_if<PureState>(&spec.head)) {
        add_projector(m, pure->amplitudes, spec.weights[0]);
    } else {
        const auto& rho0 = std::get<DensityMatrix>(spec.head).matrix;
        for (std::size_t r = 0; r < n; ++r) {
            m(r, r) += spec.weights[0] * rho0(r, r).real();
            for (std::size_t c = r + 1; c < n; ++c) {
                const cplx v = spec.weights[0] * 0.5 * (rho0(r, c) + std::conj(rho0(c, r)));
                m(r, c) += v;
                m(c, r) += std::conj(v);
            }
        }
    }
    for (std::size_t i = 0; i < spec.tail.size(); ++i) {
        add_projector(m, spec.tail[i].amplitudes, spec.weights[i + 1]);
    }
    return DensityMatrix{spec.dims(), std::move(m)};
}

}  // namespace pptcert
