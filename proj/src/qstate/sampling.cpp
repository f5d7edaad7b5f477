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

constexpr double kSchmidtSquareFloor = 0.01;

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

cplx complex_gaussian(Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    const double re = g(rng);
    const double im = g(rng);
    return {re, im};
}

// floor + (1 - count * floor) * Dirichlet(1, .., 1)
std::vector<double> floored_simplex(std::size_t count, double floor, Rng& rng) {
    if (count == 0) {
        throw Error(ErrorCode::InvalidConfig, "simplex sample needs at least one entry");
    }
    if (static_cast<double>(count) * floor >= 1.0) {
        throw Error(ErrorCode::InvalidConfig,
                    std::to_string(count) + " entries cannot each carry floor " + std::to_string(floor));
    }
    std::exponential_distribution<double> e(1.0);
    std::vector<double> w(count);
    double total = 0.0;
    for (auto& x : w) {
        x = e(rng);
        total += x;
    }
    const double spread = 1.0 - static_cast<double>(count) * floor;
    double sum = 0.0;
    for (auto& x : w) {
        x = floor + spread * (x / total);
        sum += x;
    }
    for (auto& x : w) {
        x /= sum;
    }
    return w;
}

}  // namespace

std::uint64_t child_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return splitmix64(splitmix64(master) ^ (index + 0x632be59bd9b4e019ULL));
}

Rng make_rng(std::uint64_t seed) { return Rng(seed); }

CVector haar_vector(std::size_t dim, Rng& rng) {
    CVector v(dim);
    for (auto& z : v) {
        z = complex_gaussian(rng);
    }
    const double nrm = norm(v);
    for (auto& z : v) {
        z /= nrm;
    }
    return v;
}

// Gram-Schmidt on Ginibre columns; equivalent to QR with a positive R
// diagonal, which makes the result Haar distributed.
ComplexMatrix haar_unitary(std::size_t dim, Rng& rng) {
    std::vector<CVector> cols;
    cols.reserve(dim);
    while (cols.size() < dim) {
        CVector v(dim);
        for (auto& z : v) {
            z = complex_gaussian(rng);
        }
        const SubspaceBasis done(dim, cols);
        v = done.project_out(v);
        const double nrm = norm(v);
        if (nrm < 1e-8) {
            continue;  // measure zero; draw again
        }
        for (auto& z : v) {
            z /= nrm;
        }
        cols.push_back(std::move(v));
    }
    return ComplexMatrix::from_columns(cols, dim);
}

PureState sample_pure_schmidt_n(std::size_t n, const Bipartition& part, Rng& rng) {
    if (n == 0 || n > part.y_dim() || n > part.ybar_dim()) {
        throw Error(ErrorCode::BadRank, "Schmidt number " + std::to_string(n) + " impossible for a " +
                                            std::to_string(part.y_dim()) + " x " + std::to_string(part.ybar_dim()) +
                                            " cut");
    }
    const std::vector<double> mu_sq = floored_simplex(n, kSchmidtSquareFloor, rng);
    const ComplexMatrix u = haar_unitary(part.y_dim(), rng);
    const ComplexMatrix v = haar_unitary(part.ybar_dim(), rng);
    CVector amps(part.dims().total());
    for (std::size_t k = 0; k < n; ++k) {
        const double mu = std::sqrt(mu_sq[k]);
        for (std::size_t iy = 0; iy < part.y_dim(); ++iy) {
            const cplx left = mu * u(iy, k);
            for (std::size_t ib = 0; ib < part.ybar_dim(); ++ib) {
                amps[part.join(iy, ib)] += left * v(ib, k);
            }
        }
    }
    return make_pure(amps, part.dims());
}

PureState sample_product(const Bipartition& part, Rng& rng) {
    const CVector a = haar_vector(part.y_dim(), rng);
    const CVector b = haar_vector(part.ybar_dim(), rng);
    return product_pure(a, b, part);
}

PureState sample_fully_separable(const DimsSpec& dims, Rng& rng) {
    std::vector<CVector> factors;
    for (std::size_t s = 0; s < dims.subsystems(); ++s) {
        factors.push_back(haar_vector(dims[s], rng));
    }
    return fully_separable(factors, dims);
}

PureState sample_haar_state(const DimsSpec& dims, Rng& rng) { return make_pure(haar_vector(dims.total(), rng), dims); }

std::vector<double> sample_weights(std::size_t count, Rng& rng, double floor) {
    return floored_simplex(count, floor, rng);
}

}  // namespace pptcert
