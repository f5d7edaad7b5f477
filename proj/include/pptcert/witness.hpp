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

#include <optional>
#include <vector>

#include "pptcert/linalg.hpp"
#include "pptcert/ppt.hpp"
#include "pptcert/qstate.hpp"

namespace pptcert {

/// A unit vector xi with <xi| rho^{T_Y} |xi> < -tolerance.
struct NptCertificate {
    CVector xi;
    Bipartition partition;
    double quad_value = 0.0;             ///< <xi| rho^{T_Y} |xi> of the whole mixture
    std::vector<double> per_component;   ///< <xi| (component i)^{T_Y} |xi>, unweighted
    double tolerance = kDefaultNegTol;
};

enum class DecidedBy { Witness, Spectrum };

const char* to_string(DecidedBy d) noexcept;

/// Result of certify(): a witness certificate when the construction works,
/// otherwise the full-spectrum classification of the mixed state.
struct CertifyOutcome {
    DecidedBy decided_by = DecidedBy::Spectrum;
    std::optional<NptCertificate> certificate;
    std::optional<ClassificationReport> spectrum;
    std::size_t head_negative_count = 0;  ///< p_Y of component 0

    bool npt() const noexcept;
};

/// Span of the eigenvectors of rho0^{T_Y} with eigenvalue below the scaled
/// negativity threshold; its dimension is p_Y.
SubspaceBasis negative_eigenspace(const DensityMatrix& rho0, const Bipartition& part, double tol = kDefaultNegTol);

/// For a product vector a (x) b across `part`, returns conj(a) (x) b. The
/// partial transpose of |chi><chi| is the projector onto this vector, so the
/// separable terms vanish on its orthogonal complement.
/// Throws NotSeparableInput if chi is not a product across the cut.
CVector partially_conjugated(const PureState& chi, const Bipartition& part);

/// A unit vector in V_- ∩ span{partially conjugated separables}^perp that
/// minimizes <xi| rho0^{T_Y} |xi> over the intersection, or nullopt when the
/// intersection is numerically trivial.
std::optional<CVector> find_witness(const DensityMatrix& rho0, const std::vector<PureState>& separables,
                                    const Bipartition& part, double tol = kDefaultNegTol);

/// Witness route first; falls back to classify(mix(spec)) when no valid
/// certificate comes out of it.
CertifyOutcome certify(const MixtureSpec& spec, const Bipartition& part, double tol = kDefaultNegTol);

/// Re-derives the certificate's claim from scratch on mix(spec). True iff
/// the quadratic form is below -tolerance.
bool certificate_holds(const NptCertificate& cert, const MixtureSpec& spec);

// Two-qubit reduction for a Schmidt-rank-2 state mixed with one product state.

struct Theorem1Reduction {
    double mu1 = 0.0;
    double mu2 = 0.0;
    cplx a, b, c, d;          ///< (a|0> + b|1>) (x) (c|0> + d|1>) after rotation and projection
    ComplexMatrix rho_tilde;  ///< 4x4, basis |00>, |01>, |10>, |11>
    ComplexMatrix u;          ///< Y-side rotation taking chi0's left frame to |0>, |1>
    ComplexMatrix v;          ///< Ybar-side rotation
    bool projection_lost_norm = false;  ///< |a|^2+|b|^2 or |c|^2+|d|^2 below 1 - 1e-12
};

/// rho = lambda0 |chi0><chi0| + lambda1 |chi1><chi1| on a two-party system;
/// rho_tilde = (P (x) P)(U (x) V) rho (U (x) V)^dagger (P (x) P) with P the
/// projector on the first two levels. Throws WrongSchmidtNumber unless chi0
/// has Schmidt number 2 and NotProduct unless chi1 is a product.
Theorem1Reduction theorem1_reduce(const PureState& chi0, const PureState& chi1, double lambda0, double lambda1);

/// -l0^4 mu1^4 mu2^4 - l1 l0^3 mu1^2 mu2^2 |mu1 b d + mu2 a c|^2
double theorem1_det(const Theorem1Reduction& red, double lambda0, double lambda1);

/// det(rho_tilde^{T_1}) by LU; the numeric counterpart of theorem1_det.
double theorem1_numeric_det(const Theorem1Reduction& red);

}  // namespace pptcert
