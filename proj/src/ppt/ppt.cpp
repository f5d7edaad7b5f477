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
#include "pptcert/ppt.hpp"

namespace pptcert {

const char* to_string(PptLabel label) noexcept { return label == PptLabel::NPT ? "NPT" : "PPT"; }

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const Bipartition& part) {
    const std::size_t n = part.dims().total();
    if (rho.rows() != n || rho.cols() != n) {
        throw Error(ErrorCode::DimensionMismatch, "partial_transpose: matrix is " + std::to_string(rho.rows()) +
                                                      "x" + std::to_string(rho.cols()) + ", partition needs " +
                                                      std::to_string(n));
    }
    ComplexMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t ry = part.y_index(r);
        const std::size_t rb = part.ybar_index(r);
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t cy = part.y_index(c);
            const std::size_t cb = part.ybar_index(c);
            out(r, c) = rho(part.join(cy, rb), part.join(ry, cb));
        }
    }
    return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, const Bipartition& part) {
    if (!(rho.dims == part.dims())) {
        throw Error(ErrorCode::DimensionMismatch, "partial_transpose: state and partition dimensions differ");
    }
    return partial_transpose(rho.matrix, part);
}

double negativity_threshold(double tol, double max_abs) noexcept { return tol * std::max(1.0, max_abs); }

ClassificationReport classify(const DensityMatrix& rho, const Bipartition& part, double tol) {
    const ComplexMatrix pt = partial_transpose(rho, part);
    HermitianEig eig = hermitian_eig(pt);
    const double threshold = negativity_threshold(tol, pt.max_abs());

    ClassificationReport rep;
    rep.partition = part;
    rep.tolerance = tol;
    rep.min_eigenvalue = eig.values.front();
    rep.negative_count = static_cast<std::size_t>(
        std::count_if(eig.values.begin(), eig.values.end(), [&](double v) { return v < -threshold; }));
    rep.label = rep.negative_count > 0 ? PptLabel::NPT : PptLabel::PPT;
    rep.borderline = rep.label == PptLabel::PPT && std::abs(rep.min_eigenvalue) <= threshold;
    rep.eigenvalues = std::move(eig.values);
    return rep;
}

std::vector<double> pure_pt_spectrum(const std::vector<double>& mu, std::size_t padded_dim) {
    if (mu.empty()) {
        throw Error(ErrorCode::BadCoefficients, "no Schmidt coefficients");
    }
    double total = 0.0;
    for (double m : mu) {
        if (!(m > 0.0)) {
            throw Error(ErrorCode::BadCoefficients, "Schmidt coefficient " + std::to_string(m) + " is not positive");
        }
        total += m * m;
    }
    if (std::abs(total - 1.0) > 1e-10) {
        throw Error(ErrorCode::BadCoefficients, "squared Schmidt coefficients sum to " + std::to_string(total));
    }
    const std::size_t n = mu.size();
    if (padded_dim == 0) {
        padded_dim = n * n;
    }
    if (padded_dim < n * n) {
        throw Error(ErrorCode::BadCoefficients, "padded dimension smaller than n^2");
    }
    std::vector<double> out;
    out.reserve(padded_dim);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(mu[i] * mu[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            out.push_back(mu[i] * mu[j]);
            out.push_back(-mu[i] * mu[j]);
        }
    }
    out.resize(padded_dim, 0.0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Bipartition> enumerate_partitions(const DimsSpec& dims) {
    const std::size_t m = dims.subsystems();
    std::vector<Bipartition> cuts;
    // Bit s-1 of mask selects subsystem s >= 1; the all-ones mask is Y = everything.
    const std::size_t limit = std::size_t{1} << (m - 1);
    for (std::size_t mask = 0; mask + 1 < limit; ++mask) {
        std::vector<std::size_t> y{0};
        for (std::size_t s = 1; s < m; ++s) {
            if (mask & (std::size_t{1} << (s - 1))) {
                y.push_back(s);
            }
        }
        cuts.emplace_back(dims, std::move(y));
    }
    return cuts;
}

PartitionScan scan_partitions(const DensityMatrix& rho, double tol) {
    PartitionScan scan;
    for (const auto& cut : enumerate_partitions(rho.dims)) {
        scan.reports.push_back(classify(rho, cut, tol));
        const std::size_t p = scan.reports.back().negative_count;
        if (p > scan.max_negative_count) {
            scan.max_negative_count = p;
            scan.best = scan.reports.size() - 1;
        }
    }
    return scan;
}

}  // namespace pptcert
