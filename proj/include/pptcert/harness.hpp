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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pptcert/ppt.hpp"
#include "pptcert/qstate.hpp"
#include "pptcert/witness.hpp"

namespace pptcert {

enum class Theorem { T1, T2, Corollary, T3, OpenQ };

const char* to_string(Theorem t) noexcept;
/// Accepts "1", "2", "3", "corollary", "open" (and the enum spellings).
Theorem parse_theorem(const std::string& s);

struct TrialConfig {
    Theorem theorem = Theorem::T2;
    DimsSpec dims;
    std::size_t n = 0;  ///< target Schmidt number of chi0; unused for T3 (chi0 is Haar random)
    std::size_t k = 0;  ///< number of separable components
    std::size_t trials = 0;
    std::uint64_t master_seed = 0;
    double tolerance = kDefaultNegTol;
};

/// Throws InvalidConfig when K exceeds the bound the theorem is stated for.
void validate(const TrialConfig& cfg);

struct TrialFailure {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    double min_eigenvalue = 0.0;
    bool witness_found = false;
    std::string reason;
};

struct TrialSummary {
    TrialConfig config;
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t witness_count = 0;  ///< trials decided by a witness certificate
    std::vector<TrialFailure> failures;
    double wall_time_seconds = 0.0;  ///< not part of the JSON report
};

/// Per trial: sample chi0 (or the depolarized rho0 for the corollary), K
/// separable states and weights, mix, certify, and cross-check against the
/// full spectrum. T1 additionally checks the closed-form determinant.
TrialSummary run_trials(const TrialConfig& cfg);

/// Classification of the Example 1 mixture across Y = {0}.
ClassificationReport example1_check();
/// PPT and min eigenvalue within [1e-5, 1e-4].
bool example1_expected(const ClassificationReport& rep);

struct SweepRow {
    double alpha = 0.0;
    double min_eigenvalue = 0.0;
    PptLabel label = PptLabel::PPT;
};

struct HorodeckiSweep {
    std::vector<SweepRow> rows;
    /// PPT -> NPT transitions located by bisection to 1e-6.
    std::vector<double> boundaries;
};

HorodeckiSweep horodecki_sweep(double alpha_min, double alpha_max, std::size_t steps,
                               double tol = kDefaultNegTol);

struct OpenScanResult {
    TrialSummary summary;
    std::size_t flagged = 0;                  ///< PPT at the working tolerance
    std::vector<MixtureSpec> counterexamples;  ///< still PPT at 1e-12
    std::vector<std::size_t> counterexample_trials;
};

/// Mixtures at exactly K = n(n-1)/2, outside the proven range.
OpenScanResult open_question_scan(std::size_t n, const DimsSpec& dims, std::size_t trials, std::uint64_t master_seed,
                                  double tol = kDefaultNegTol);

/// Largest possible p_Y over all cuts for pure states on these dimensions.
std::size_t max_negative_count_bound(const DimsSpec& dims);

}  // namespace pptcert
