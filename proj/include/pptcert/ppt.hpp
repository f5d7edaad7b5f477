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
#include <vector>

#include "pptcert/linalg.hpp"
#include "pptcert/qstate.hpp"

namespace pptcert {

/// Default negativity threshold, scaled by max(1, ||rho^{T_Y}||_max).
inline constexpr double kDefaultNegTol = 1e-10;

enum class PptLabel { PPT, NPT };

const char* to_string(PptLabel label) noexcept;

struct ClassificationReport {
    Bipartition partition;
    double min_eigenvalue = 0.0;
    std::size_t negative_count = 0;  ///< p_Y
    PptLabel label = PptLabel::PPT;
    double tolerance = kDefaultNegTol;
    /// PPT with |min eigenvalue| inside the threshold.
    bool borderline = false;
    std::vector<double> eigenvalues;  ///< ascending spectrum of rho^{T_Y}
};

struct PartitionScan {
    std::vector<ClassificationReport> reports;  ///< enumeration order
    std::size_t best = 0;                       ///< index into reports of Y_0
    std::size_t max_negative_count = 0;         ///< p_{Y_0}

    const Bipartition& best_partition() const { return reports.at(best).partition; }
};

/// <i_Y i_Ybar| R |k_Y k_Ybar> = <k_Y i_Ybar| rho |i_Y k_Ybar>. Pure index
/// permutation, so involution and trace preservation are exact.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const Bipartition& part);
ComplexMatrix partial_transpose(const DensityMatrix& rho, const Bipartition& part);

/// Absolute threshold used for a matrix with the given max-abs entry.
double negativity_threshold(double tol, double max_abs) noexcept;

/// Counts eigenvalues below -negativity_threshold(tol, ...).
ClassificationReport classify(const DensityMatrix& rho, const Bipartition& part, double tol = kDefaultNegTol);

/// {mu_i^2} U {+-mu_i mu_j : i < j} padded with zeros to padded_dim (0 means
/// n^2), ascending. Throws BadCoefficients unless mu_i > 0 and sum mu_i^2 = 1.
std::vector<double> pure_pt_spectrum(const std::vector<double>& mu, std::size_t padded_dim = 0);

/// All cuts with subsystem 0 in Y (the complementary cut has the transposed
/// partial transpose and the same spectrum).
std::vector<Bipartition> enumerate_partitions(const DimsSpec& dims);

PartitionScan scan_partitions(const DensityMatrix& rho, double tol = kDefaultNegTol);

}  // namespace pptcert
