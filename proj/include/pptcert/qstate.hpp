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

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <variant>
#include <vector>

#include "pptcert/linalg.hpp"

// States on a tensor product of m >= 2 subsystems. Basis ket |i_0 ... i_{m-1}>
// maps to the mixed-radix flat index with subsystem 0 most significant, all
// labels 0-based (a ket written |11> with 1-based labels is flat index 0).

namespace pptcert {

using Rng = std::mt19937_64;

/// Schmidt coefficients above this fraction of the largest count toward n.
inline constexpr double kDefaultSchmidtTol = 1e-9;

class DimsSpec {
public:
    DimsSpec() = default;
    /// Throws InvalidState unless there are >= 2 entries, each >= 2.
    explicit DimsSpec(std::vector<std::size_t> dims);

    std::size_t subsystems() const noexcept { return dims_.size(); }
    std::size_t total() const noexcept { return total_; }
    std::size_t operator[](std::size_t i) const noexcept { return dims_[i]; }
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    /// Flat-index weight of one unit step on subsystem i.
    std::size_t stride(std::size_t i) const noexcept { return strides_[i]; }

    friend bool operator==(const DimsSpec& a, const DimsSpec& b) { return a.dims_ == b.dims_; }

private:
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> strides_;
    std::size_t total_ = 0;
};

/// Cut of the subsystems into Y and its complement. Local indices on either
/// side are mixed radix over that side's subsystems in increasing order.
class Bipartition {
public:
    Bipartition() = default;
    /// Y must be a nonempty proper subset of {0, .., m-1}; duplicates rejected.
    Bipartition(DimsSpec dims, std::vector<std::size_t> y);

    /// Y = {0} on a two-party system.
    static Bipartition first_of(const DimsSpec& dims) { return Bipartition(dims, {0}); }

    const DimsSpec& dims() const noexcept { return dims_; }
    const std::vector<std::size_t>& y() const noexcept { return y_; }
    const std::vector<std::size_t>& ybar() const noexcept { return ybar_; }
    std::size_t y_dim() const noexcept { return y_offset_.size(); }
    std::size_t ybar_dim() const noexcept { return ybar_offset_.size(); }

    /// Flat index of |local Y index> (x) |local Ybar index>.
    std::size_t join(std::size_t iy, std::size_t iybar) const noexcept { return y_offset_[iy] + ybar_offset_[iybar]; }
    std::size_t y_index(std::size_t flat) const noexcept { return y_of_flat_[flat]; }
    std::size_t ybar_index(std::size_t flat) const noexcept { return ybar_of_flat_[flat]; }

    Bipartition complement() const { return Bipartition(dims_, ybar_); }

    friend bool operator==(const Bipartition& a, const Bipartition& b) { return a.dims_ == b.dims_ && a.y_ == b.y_; }

private:
    DimsSpec dims_;
    std::vector<std::size_t> y_;
    std::vector<std::size_t> ybar_;
    std::vector<std::size_t> y_offset_;
    std::vector<std::size_t> ybar_offset_;
    std::vector<std::size_t> y_of_flat_;
    std::vector<std::size_t> ybar_of_flat_;
};

struct PureState {
    DimsSpec dims;
    CVector amplitudes;
    /// Set when make_pure had to rescale by more than 1e-8.
    bool renormalized = false;
};

struct DensityMatrix {
    DimsSpec dims;
    ComplexMatrix matrix;
};

struct SchmidtDecomposition {
    std::vector<double> coefficients;  ///< descending, all > 0
    std::vector<CVector> left;         ///< Y-side frame, one per coefficient
    std::vector<CVector> right;        ///< Ybar-side frame
    std::size_t schmidt_number = 0;    ///< coefficients above kDefaultSchmidtTol * mu_1
};

/// Component 0 of a mixture: a pure state, or for the mixed-state variant a
/// density matrix.
using MixtureHead = std::variant<PureState, DensityMatrix>;

struct MixtureSpec {
    std::vector<double> weights;          ///< lambda_0 .. lambda_K
    MixtureHead head;                     ///< component 0
    std::vector<PureState> tail;          ///< components 1 .. K
    std::vector<bool> separable_flags;    ///< per component; empty means head entangled, tail separable

    std::size_t k() const noexcept { return tail.size(); }
    const DimsSpec& dims() const;
    bool flagged_separable(std::size_t component) const;
};

// Construction

PureState make_pure(std::span<const cplx> amps, const DimsSpec& dims);
PureState product_pure(std::span<const cplx> factor_y, std::span<const cplx> factor_ybar, const Bipartition& part);
/// Product of one factor per subsystem.
PureState fully_separable(std::span<const CVector> factors, const DimsSpec& dims);

/// Throws InvalidState when the density invariants (Hermitian 1e-12, unit
/// trace 1e-12, min eigenvalue >= -1e-10) fail.
DensityMatrix make_density(const ComplexMatrix& m, const DimsSpec& dims);
DensityMatrix to_density(const PureState& psi);
DensityMatrix head_density(const MixtureHead& head);
/// Throws WeightMismatch / DimensionMismatch on malformed specs.
void validate(const MixtureSpec& spec);
DensityMatrix mix(const MixtureSpec& spec);

// Decomposition

/// psi reshaped as the y_dim x ybar_dim coefficient matrix.
ComplexMatrix coefficient_matrix(std::span<const cplx> psi, const Bipartition& part);
SchmidtDecomposition schmidt_decompose(const PureState& psi, const Bipartition& part);
std::size_t schmidt_number(const PureState& psi, const Bipartition& part, double tol = kDefaultSchmidtTol);
/// Sum_i mu_i left_i (x) right_i laid out per the bipartition.
CVector reassemble(const SchmidtDecomposition& sd, const Bipartition& part);

// Named families

/// sigma_alpha on 3x3, alpha in [2, 5]; AlphaOutOfRange otherwise.
DensityMatrix horodecki(double alpha);
/// (|00> + |11> + |22>) / sqrt(3)
PureState psi_plus_3x3();
/// The 3x3 mixture of one Schmidt-rank-3 state with four product states that
/// stays PPT (weights 0.01, 0.6, 0.09, 0.15, 0.15).
MixtureSpec example1_mixture();

// Sampling. All randomness comes from the caller's generator.

/// Child generator for trial `index` of a campaign seeded with `master`.
std::uint64_t child_seed(std::uint64_t master, std::uint64_t index) noexcept;
Rng make_rng(std::uint64_t seed);

CVector haar_vector(std::size_t dim, Rng& rng);
ComplexMatrix haar_unitary(std::size_t dim, Rng& rng);
/// Schmidt number exactly n across `part`: mu^2 uniform on the simplex with
/// floor 0.01 each, then Haar local unitaries. BadRank if n exceeds either side.
PureState sample_pure_schmidt_n(std::size_t n, const Bipartition& part, Rng& rng);
PureState sample_product(const Bipartition& part, Rng& rng);
PureState sample_fully_separable(const DimsSpec& dims, Rng& rng);
PureState sample_haar_state(const DimsSpec& dims, Rng& rng);
/// count positive weights summing to 1: floor + (1 - count*floor) * Dirichlet(1..1).
std::vector<double> sample_weights(std::size_t count, Rng& rng, double floor = 1e-3);

}  // namespace pptcert
