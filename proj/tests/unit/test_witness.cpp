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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "pptcert/error.hpp"
#include "pptcert/ppt.hpp"
#include "pptcert/qstate.hpp"
#include "pptcert/witness.hpp"

namespace {

using namespace pptcert;

const DimsSpec kD22({2, 2});
const DimsSpec kD33({3, 3});

PureState bell_state() { return make_pure(CVector{1.0, 0.0, 0.0, 1.0}, kD22); }

CVector ket(std::size_t n, std::size_t i) {
    CVector v(n);
    v[i] = 1.0;
    return v;
}

// Direct quadratic form of the partially transposed projector.
double pt_quad(const PureState& chi, const CVector& xi, const Bipartition& part) {
    return quadratic_form(partial_transpose(to_density(chi), part), xi);
}

MixtureSpec random_mixture(std::size_t n, std::size_t k, const Bipartition& cut, Rng& rng) {
    MixtureSpec spec;
    spec.weights = sample_weights(k + 1, rng);
    spec.head = sample_pure_schmidt_n(n, cut, rng);
    for (std::size_t i = 0; i < k; ++i) spec.tail.push_back(sample_product(cut, rng));
    return spec;
}

TEST(NegativeEigenspace, Examples) {
    const Bipartition cut = Bipartition::first_of(kD22);
    const SubspaceBasis v = negative_eigenspace(to_density(bell_state()), cut);
    ASSERT_EQ(v.dim(), 1u);
    // (|01> - |10>)/sqrt(2) up to phase.
    const CVector singlet{0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0};
    EXPECT_NEAR(std::abs(dot(v[0], singlet)), 1.0, 1e-14);

    EXPECT_EQ(negative_eigenspace(to_density(make_pure(ket(4, 0), kD22)), cut).dim(), 0u);

    const MixtureSpec ex = example1_mixture();
    EXPECT_EQ(negative_eigenspace(head_density(ex.head), Bipartition::first_of(kD33)).dim(), 3u);
}

TEST(PartiallyConjugated, ConjugatesOnlyTheYFactor) {
    const Bipartition cut = Bipartition::first_of(kD22);
    const cplx i(0.0, 1.0);
    const PureState chi = product_pure(CVector{1.0, i}, CVector{1.0, i}, cut);
    const CVector pc = partially_conjugated(chi, cut);
    // conj(1, i) (x) (1, i) / 2 = (1, i, -i, 1) / 2 up to global phase.
    const CVector expected{0.5, 0.5 * i, -0.5 * i, 0.5};
    EXPECT_NEAR(std::abs(dot(pc, expected)), 1.0, 1e-15);
    // Quadratic form of the PT projector equals the overlap with this vector.
    Rng rng = make_rng(3);
    const CVector xi = haar_vector(4, rng);
    EXPECT_NEAR(pt_quad(chi, xi, cut), std::norm(dot(xi, pc)), 1e-15);
    try {
        partially_conjugated(bell_state(), cut);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotSeparableInput);
    }
}

TEST(FindWitness, BellWithoutSeparables) {
    const Bipartition cut = Bipartition::first_of(kD22);
    const DensityMatrix rho0 = to_density(bell_state());
    const auto xi = find_witness(rho0, {}, cut);
    ASSERT_TRUE(xi.has_value());
    EXPECT_NEAR(norm(*xi), 1.0, 1e-14);
    EXPECT_NEAR(quadratic_form(partial_transpose(rho0, cut), *xi), -0.5, 1e-14);
}

TEST(FindWitness, RejectsEntangledTail) {
    const Bipartition cut = Bipartition::first_of(kD22);
    EXPECT_THROW(find_witness(to_density(bell_state()), {bell_state()}, cut), Error);
}

TEST(FindWitness, SchmidtThreeWithTwoProducts) {
    Rng rng = make_rng(31);
    const Bipartition cut = Bipartition::first_of(kD33);
    for (int trial = 0; trial < 50; ++trial) {
        const PureState chi0 = sample_pure_schmidt_n(3, cut, rng);
        const std::vector<PureState> seps{sample_product(cut, rng), sample_product(cut, rng)};
        const auto xi = find_witness(to_density(chi0), seps, cut);
        ASSERT_TRUE(xi.has_value());
        EXPECT_LT(pt_quad(chi0, *xi, cut), -1e-6);
        for (const auto& s : seps) {
            EXPECT_LT(std::abs(dot(*xi, partially_conjugated(s, cut))), 1e-10);
            EXPECT_LT(std::abs(pt_quad(s, *xi, cut)), 1e-15);
        }
    }
}

// K = p_Y generic products leave no room for the intersection; certify then
// has to fall back to the full spectrum.
TEST(FindWitness, SaturatedBudgetFallsBackToSpectrum) {
    Rng rng = make_rng(32);
    const Bipartition cut = Bipartition::first_of(kD33);
    int none = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const MixtureSpec spec = random_mixture(3, 3, cut, rng);
        const auto xi = find_witness(head_density(spec.head), spec.tail, cut);
        if (xi) continue;
        ++none;
        const CertifyOutcome out = certify(spec, cut);
        EXPECT_EQ(out.decided_by, DecidedBy::Spectrum);
        ASSERT_TRUE(out.spectrum.has_value());
        EXPECT_EQ(out.spectrum->label, classify(mix(spec), cut).label);
        EXPECT_EQ(out.npt(), out.spectrum->label == PptLabel::NPT);
    }
    EXPECT_GT(none, 0);
}

TEST(Certify, TwoQubitNoTailMatchesAnalyticValue) {
    Rng rng = make_rng(33);
    const Bipartition cut = Bipartition::first_of(kD22);
    for (int trial = 0; trial < 50; ++trial) {
        MixtureSpec spec;
        spec.weights = {1.0};
        spec.head = sample_pure_schmidt_n(2, cut, rng);
        const SchmidtDecomposition sd = schmidt_decompose(std::get<PureState>(spec.head), cut);
        const CertifyOutcome out = certify(spec, cut);
        ASSERT_EQ(out.decided_by, DecidedBy::Witness);
        ASSERT_TRUE(out.certificate.has_value());
        EXPECT_NEAR(out.certificate->quad_value, -sd.coefficients[0] * sd.coefficients[1], 1e-12);
        EXPECT_EQ(out.head_negative_count, 1u);
    }
}

TEST(Certify, Example1FallsBackToPpt) {
    const MixtureSpec ex = example1_mixture();
    const CertifyOutcome out = certify(ex, Bipartition::first_of(kD33));
    EXPECT_EQ(out.decided_by, DecidedBy::Spectrum);
    EXPECT_FALSE(out.certificate.has_value());
    ASSERT_TRUE(out.spectrum.has_value());
    EXPECT_EQ(out.spectrum->label, PptLabel::PPT);
    EXPECT_FALSE(out.npt());
    EXPECT_EQ(out.head_negative_count, 3u);
}

TEST(CertifyProperty, SoundnessLinearityAnnihilation) {
    Rng rng = make_rng(34);
    const std::vector<std::vector<std::size_t>> shapes{{3, 3}, {3, 4}, {4, 4}, {5, 5}};
    int certificates = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const DimsSpec d(shapes[trial % shapes.size()]);
        const Bipartition cut = Bipartition::first_of(d);
        const std::size_t cap = std::min(d[0], d[1]);
        const std::size_t n = 3 + static_cast<std::size_t>(trial) % (cap - 2);
        const std::size_t k = static_cast<std::size_t>(trial) % (n * (n - 1) / 2);
        const MixtureSpec spec = random_mixture(n, k, cut, rng);
        const CertifyOutcome out = certify(spec, cut);
        ASSERT_EQ(out.decided_by, DecidedBy::Witness) << "trial " << trial;
        const NptCertificate& cert = *out.certificate;
        ++certificates;
        EXPECT_NEAR(norm(cert.xi), 1.0, 1e-12);
        EXPECT_TRUE(certificate_holds(cert, spec));
        const double direct = quadratic_form(partial_transpose(mix(spec), cut), cert.xi);
        EXPECT_LT(direct, -cert.tolerance);
        EXPECT_NEAR(direct, cert.quad_value, 1e-10);
        const double weighted =
            std::inner_product(spec.weights.begin(), spec.weights.end(), cert.per_component.begin(), 0.0);
        EXPECT_NEAR(weighted, cert.quad_value, 1e-10);
        EXPECT_LT(cert.per_component[0], 0.0);
        for (const auto& s : spec.tail) {
            EXPECT_LT(std::norm(dot(cert.xi, partially_conjugated(s, cut))), 1e-18);
        }
    }
    EXPECT_EQ(certificates, 300);
}

// dim V_- + dim V_s^perp >= D + 1 forces a nonzero intersection.
TEST(WitnessProperty, DimensionCountGuarantee) {
    Rng rng = make_rng(35);
    const DimsSpec d({4, 4});
    const Bipartition cut = Bipartition::first_of(d);
    int forced = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial) % 3;
        const std::size_t k = static_cast<std::size_t>(trial) % (n * (n - 1) / 2 + 2);
        const MixtureSpec spec = random_mixture(n, k, cut, rng);
        const DensityMatrix rho0 = head_density(spec.head);
        const std::size_t p = negative_eigenspace(rho0, cut).dim();
        std::vector<CVector> pcs;
        for (const auto& s : spec.tail) pcs.push_back(partially_conjugated(s, cut));
        const std::size_t span_dim = orthonormal_basis(pcs, d.total()).dim();
        const auto xi = find_witness(rho0, spec.tail, cut);
        if (p + (d.total() - span_dim) >= d.total() + 1) {
            ++forced;
            ASSERT_TRUE(xi.has_value()) << "trial " << trial;
            ASSERT_LT(quadratic_form(partial_transpose(rho0, cut), *xi), 0.0);
        }
    }
    EXPECT_GT(forced, 100);
}

// Two-qubit reduction

TEST(Theorem1, BellWithBasisProduct) {
    const PureState chi1 = make_pure(ket(4, 0), kD22);
    const Theorem1Reduction red = theorem1_reduce(bell_state(), chi1, 0.5, 0.5);
    EXPECT_NEAR(red.mu1, 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(red.mu2, 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(std::abs(red.a), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(red.c), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(red.b), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(red.d), 0.0, 1e-15);
    EXPECT_FALSE(red.projection_lost_norm);
    // -(1/2)^4 (1/4)^2 ... by hand: -1/256 - 1/128.
    EXPECT_NEAR(theorem1_det(red, 0.5, 0.5), -3.0 / 256.0, 1e-16);
    EXPECT_NEAR(theorem1_numeric_det(red), -3.0 / 256.0, 1e-15);
}

TEST(Theorem1, SingleTermWhenSecondWeightVanishes) {
    const PureState chi1 = make_pure(ket(4, 1), kD22);
    const Theorem1Reduction red = theorem1_reduce(bell_state(), chi1, 1.0, 0.0);
    const double m = red.mu1 * red.mu2;
    EXPECT_NEAR(theorem1_det(red, 1.0, 0.0), -std::pow(m, 4), 1e-16);
    EXPECT_NEAR(theorem1_numeric_det(red), -std::pow(m, 4), 1e-15);
}

TEST(Theorem1, ProjectionRemovesOrthogonalProduct) {
    CVector amps(9);
    amps[0] = 0.8;
    amps[4] = 0.6;
    const PureState chi0 = make_pure(amps, kD33);
    const PureState chi1 = make_pure(ket(9, 8), kD33);  // |22>
    const Theorem1Reduction red = theorem1_reduce(chi0, chi1, 0.3, 0.7);
    EXPECT_EQ(red.a, cplx(0.0));
    EXPECT_EQ(red.b, cplx(0.0));
    EXPECT_EQ(red.c, cplx(0.0));
    EXPECT_EQ(red.d, cplx(0.0));
    EXPECT_TRUE(red.projection_lost_norm);
    // rho_tilde = 0.3 |chi0~><chi0~| with chi0~ = 0.8|00> + 0.6|11>.
    CVector t(4);
    t[0] = 0.8;
    t[3] = 0.6;
    const ComplexMatrix expected = cplx(0.3) * ComplexMatrix::outer(t, t);
    EXPECT_LT(max_abs_diff(red.rho_tilde, expected), 1e-15);
}

TEST(Theorem1, LocalUnitaryInvariance) {
    Rng rng = make_rng(36);
    CVector amps(4);
    amps[0] = 0.8;
    amps[3] = 0.6;
    const PureState chi0 = make_pure(amps, kD22);
    const Bipartition cut = Bipartition::first_of(kD22);
    const PureState chi1 = sample_product(cut, rng);
    const Theorem1Reduction base = theorem1_reduce(chi0, chi1, 0.4, 0.6);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix uv = kron(haar_unitary(2, rng), haar_unitary(2, rng));
        const PureState r0 = make_pure(uv * std::span<const cplx>(chi0.amplitudes), kD22);
        const PureState r1 = make_pure(uv * std::span<const cplx>(chi1.amplitudes), kD22);
        const Theorem1Reduction red = theorem1_reduce(r0, r1, 0.4, 0.6);
        EXPECT_NEAR(std::abs(red.a), std::abs(base.a), 1e-12);
        EXPECT_NEAR(std::abs(red.b), std::abs(base.b), 1e-12);
        EXPECT_NEAR(std::abs(red.c), std::abs(base.c), 1e-12);
        EXPECT_NEAR(std::abs(red.d), std::abs(base.d), 1e-12);
        EXPECT_NEAR(theorem1_det(red, 0.4, 0.6), theorem1_det(base, 0.4, 0.6), 1e-14);
    }
}

TEST(Theorem1, InputValidation) {
    const PureState prod = make_pure(ket(4, 0), kD22);
    try {
        theorem1_reduce(prod, prod, 0.5, 0.5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::WrongSchmidtNumber);
    }
    try {
        theorem1_reduce(bell_state(), bell_state(), 0.5, 0.5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotProduct);
    }
    EXPECT_THROW(theorem1_reduce(psi_plus_3x3(), make_pure(ket(9, 0), kD33), 0.5, 0.5), Error);
}

// rho_tilde matches (P x P)(U x V) rho (U x V)^dagger (P x P) built by hand.
TEST(Theorem1Property, ReductionMatchesDefinition) {
    Rng rng = make_rng(37);
    const Bipartition cut = Bipartition::first_of(kD33);
    for (int trial = 0; trial < 200; ++trial) {
        const PureState chi0 = sample_pure_schmidt_n(2, cut, rng);
        const PureState chi1 = sample_product(cut, rng);
        const double l0 = 0.05 + 0.9 * std::uniform_real_distribution<double>()(rng);
        const Theorem1Reduction red = theorem1_reduce(chi0, chi1, l0, 1.0 - l0);
        MixtureSpec spec;
        spec.weights = {l0, 1.0 - l0};
        spec.head = chi0;
        spec.tail = {chi1};
        const ComplexMatrix uv = kron(red.u, red.v);
        const ComplexMatrix full = uv * mix(spec).matrix * uv.adjoint();
        const std::size_t idx[4] = {0, 1, 3, 4};
        double err = 0.0;
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) err = std::max(err, std::abs(full(idx[r], idx[c]) - red.rho_tilde(r, c)));
        ASSERT_LT(err, 1e-12) << "trial " << trial;
        ASSERT_LE(std::norm(red.a) + std::norm(red.b), 1.0 + 1e-12);
        ASSERT_LE(std::norm(red.c) + std::norm(red.d), 1.0 + 1e-12);
    }
}

TEST(Theorem1Property, ClosedFormMatchesNumericAndIsNegative) {
    Rng rng = make_rng(38);
    const std::vector<DimsSpec> shapes{kD22, kD33, DimsSpec({2, 3})};
    for (int trial = 0; trial < 10000; ++trial) {
        const DimsSpec& d = shapes[trial % shapes.size()];
        const Bipartition cut = Bipartition::first_of(d);
        const std::vector<double> w = sample_weights(2, rng);
        const Theorem1Reduction red =
            theorem1_reduce(sample_pure_schmidt_n(2, cut, rng), sample_product(cut, rng), w[0], w[1]);
        const double closed = theorem1_det(red, w[0], w[1]);
        const double numeric = theorem1_numeric_det(red);
        ASSERT_LT(closed, 0.0) << "trial " << trial;
        ASSERT_LE(std::abs(closed - numeric), 1e-10 * std::abs(numeric)) << "trial " << trial;
    }
}

}  // namespace
