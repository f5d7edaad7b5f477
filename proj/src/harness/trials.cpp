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
#include <chrono>
#include <cmath>
#include <string>

#include "pptcert/error.hpp"
#include "pptcert/harness.hpp"

namespace pptcert {

namespace {

constexpr double kCorollaryMaxEps = 0.01;
constexpr double kDetRelTol = 1e-10;
constexpr double kOverlapTol = 1e-9;
constexpr double kRecheckTol = 1e-12;

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

struct TrialOutcome {
    bool pass = false;
    bool witness_found = false;
    double min_eigenvalue = 0.0;
    std::string reason;
    std::optional<MixtureSpec> ppt_state;  ///< OpenQ: kept for the re-check
};

std::vector<PureState> sample_products(std::size_t k, const Bipartition& part, Rng& rng) {
    std::vector<PureState> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        out.push_back(sample_product(part, rng));
    }
    return out;
}

// rho0 = (1 - eps)|chi><chi| + eps I/D with the largest eps <= 0.01 (found by
// bisection) that keeps the negative count of the pure state.
DensityMatrix depolarized_head(const PureState& chi, const Bipartition& part, std::size_t target, double tol) {
    const std::size_t d = chi.dims.total();
    const DensityMatrix pure = to_density(chi);
    const auto at = [&](double eps) {
        ComplexMatrix m = (1.0 - eps) * pure.matrix;
        for (std::size_t i = 0; i < d; ++i) {
            m(i, i) += eps / static_cast<double>(d);
        }
        return DensityMatrix{chi.dims, std::move(m)};
    };
    const auto keeps = [&](double eps) { return classify(at(eps), part, tol).negative_count == target; };
    if (keeps(kCorollaryMaxEps)) {
        return make_density(at(kCorollaryMaxEps).matrix, chi.dims);
    }
    double lo = 0.0;
    double hi = kCorollaryMaxEps;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (keeps(mid) ? lo : hi) = mid;
    }
    return make_density(at(lo).matrix, chi.dims);
}

bool overlaps_vanish(const CVector& xi, const std::vector<PureState>& tail, const Bipartition& part) {
    for (const auto& chi : tail) {
        if (std::abs(dot(xi, partially_conjugated(chi, part))) >= kOverlapTol) {
            return false;
        }
    }
    return true;
}

// Shared tail of every trial: certify, classify independently, compare.
TrialOutcome judge(const MixtureSpec& spec, const Bipartition& part, double tol, bool witness_required) {
    TrialOutcome out;
    const CertifyOutcome cert = certify(spec, part, tol);
    const ClassificationReport oracle = classify(mix(spec), part, tol);
    out.min_eigenvalue = oracle.min_eigenvalue;
    out.witness_found = cert.certificate.has_value();

    if (cert.npt() != (oracle.label == PptLabel::NPT)) {
        out.reason = "certify and full-spectrum classification disagree";
        return out;
    }
    if (oracle.label != PptLabel::NPT) {
        out.reason = "mixture is PPT";
        return out;
    }
    if (cert.certificate) {
        if (!certificate_holds(*cert.certificate, spec)) {
            out.reason = "certificate does not hold when recomputed on the mixture";
            return out;
        }
        if (!overlaps_vanish(cert.certificate->xi, spec.tail, part)) {
            out.reason = "witness overlaps a separable component";
            return out;
        }
    } else if (witness_required) {
        out.reason = "no witness inside the proven range";
        return out;
    }
    out.pass = true;
    return out;
}

TrialOutcome trial_t1(const TrialConfig& cfg, Rng& rng) {
    const Bipartition part = Bipartition::first_of(cfg.dims);
    MixtureSpec spec;
    const PureState chi0 = sample_pure_schmidt_n(2, part, rng);
    spec.tail = sample_products(1, part, rng);
    spec.weights = sample_weights(2, rng);
    spec.head = chi0;

    TrialOutcome out = judge(spec, part, cfg.tolerance, false);
    if (!out.pass) {
        return out;
    }
    const Theorem1Reduction red = theorem1_reduce(chi0, spec.tail[0], spec.weights[0], spec.weights[1]);
    const double closed = theorem1_det(red, spec.weights[0], spec.weights[1]);
    const double numeric = theorem1_numeric_det(red);
    if (!(closed < 0.0)) {
        out.pass = false;
        out.reason = "closed-form determinant not negative";
    } else if (std::abs(closed - numeric) > kDetRelTol * std::abs(numeric)) {
        out.pass = false;
        out.reason = "closed-form determinant " + std::to_string(closed) + " vs numeric " + std::to_string(numeric);
    }
    return out;
}

TrialOutcome trial_bipartite(const TrialConfig& cfg, Rng& rng, bool witness_required) {
    const Bipartition part = Bipartition::first_of(cfg.dims);
    MixtureSpec spec;
    spec.head = sample_pure_schmidt_n(cfg.n, part, rng);
    spec.tail = sample_products(cfg.k, part, rng);
    spec.weights = sample_weights(cfg.k + 1, rng);
    TrialOutcome out = judge(spec, part, cfg.tolerance, witness_required);
    if (cfg.theorem == Theorem::OpenQ && !out.pass && out.reason == "mixture is PPT") {
        out.ppt_state = std::move(spec);
    }
    return out;
}

TrialOutcome trial_corollary(const TrialConfig& cfg, Rng& rng) {
    const Bipartition part = Bipartition::first_of(cfg.dims);
    const std::size_t target = pair_count(cfg.n);
    MixtureSpec spec;
    spec.head = depolarized_head(sample_pure_schmidt_n(cfg.n, part, rng), part, target, cfg.tolerance);
    spec.tail = sample_products(cfg.k, part, rng);
    spec.weights = sample_weights(cfg.k + 1, rng);
    return judge(spec, part, cfg.tolerance, cfg.k + 1 <= target);
}

TrialOutcome trial_t3(const TrialConfig& cfg, Rng& rng) {
    const PureState chi0 = sample_haar_state(cfg.dims, rng);
    const PartitionScan scan = scan_partitions(to_density(chi0), cfg.tolerance);
    const Bipartition& best = scan.best_partition();
    if (cfg.k + 1 > scan.max_negative_count) {
        TrialOutcome out;
        out.reason = "K = " + std::to_string(cfg.k) + " exceeds p_Y0 - 1 = " +
                     std::to_string(scan.max_negative_count) + " - 1";
        return out;
    }
    MixtureSpec spec;
    spec.head = chi0;
    // Alternate biseparable (product across Y0) and fully separable states.
    for (std::size_t i = 0; i < cfg.k; ++i) {
        spec.tail.push_back(i % 2 == 0 ? sample_product(best, rng) : sample_fully_separable(cfg.dims, rng));
    }
    spec.weights = sample_weights(cfg.k + 1, rng);
    return judge(spec, best, cfg.tolerance, true);
}

TrialOutcome run_one(const TrialConfig& cfg, Rng& rng) {
    switch (cfg.theorem) {
        case Theorem::T1: return trial_t1(cfg, rng);
        case Theorem::T2: return trial_bipartite(cfg, rng, true);
        case Theorem::Corollary: return trial_corollary(cfg, rng);
        case Theorem::T3: return trial_t3(cfg, rng);
        case Theorem::OpenQ: return trial_bipartite(cfg, rng, false);
    }
    return {};
}

template <class OnTrial>
TrialSummary run_campaign(const TrialConfig& cfg, OnTrial&& on_trial) {
    validate(cfg);
    const auto start = std::chrono::steady_clock::now();
    TrialSummary summary;
    summary.config = cfg;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        const std::uint64_t seed = child_seed(cfg.master_seed, t);
        Rng rng = make_rng(seed);
        TrialOutcome out;
        try {
            out = run_one(cfg, rng);
        } catch (const Error& e) {
            out.pass = false;
            out.reason = e.what();
        }
        ++summary.total;
        if (out.witness_found && out.pass) {
            ++summary.witness_count;
        }
        if (out.pass) {
            ++summary.passed;
        } else {
            ++summary.failed;
            summary.failures.push_back({t, seed, out.min_eigenvalue, out.witness_found, out.reason});
        }
        on_trial(t, out);
    }
    summary.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return summary;
}

}  // namespace

const char* to_string(Theorem t) noexcept {
    switch (t) {
        case Theorem::T1: return "T1";
        case Theorem::T2: return "T2";
        case Theorem::Corollary: return "Corollary";
        case Theorem::T3: return "T3";
        case Theorem::OpenQ: return "OpenQ";
    }
    return "?";
}

Theorem parse_theorem(const std::string& s) {
    if (s == "1" || s == "T1") return Theorem::T1;
    if (s == "2" || s == "T2") return Theorem::T2;
    if (s == "3" || s == "T3") return Theorem::T3;
    if (s == "corollary" || s == "Corollary") return Theorem::Corollary;
    if (s == "open" || s == "OpenQ") return Theorem::OpenQ;
    throw Error(ErrorCode::InvalidConfig, "unknown theorem '" + s + "'");
}

std::size_t max_negative_count_bound(const DimsSpec& dims) {
    std::size_t best = 0;
    for (const auto& cut : enumerate_partitions(dims)) {
        best = std::max(best, pair_count(std::min(cut.y_dim(), cut.ybar_dim())));
    }
    return best;
}

void validate(const TrialConfig& cfg) {
    const auto fail = [&](const std::string& why) {
        throw Error(ErrorCode::InvalidConfig, std::string(to_string(cfg.theorem)) + ": " + why);
    };
    if (cfg.dims.subsystems() < 2) {
        fail("dimensions not set");
    }
    if (!(cfg.tolerance > 0.0)) {
        fail("tolerance must be positive");
    }
    const bool bipartite = cfg.dims.subsystems() == 2;
    const std::size_t side = bipartite ? std::min(cfg.dims[0], cfg.dims[1]) : 0;
    switch (cfg.theorem) {
        case Theorem::T1:
            if (!bipartite) fail("needs a two-party system");
            if (cfg.n != 2 || cfg.k != 1) fail("covers n = 2, K = 1 only");
            break;
        case Theorem::T2:
            if (!bipartite) fail("needs a two-party system");
            if (cfg.n <= 2 || cfg.n > side) fail("n must satisfy 2 < n <= min(d_A, d_B)");
            if (cfg.k + 1 > pair_count(cfg.n)) fail("K must be at most n(n-1)/2 - 1");
            break;
        case Theorem::Corollary:
            if (!bipartite) fail("needs a two-party system");
            if (cfg.n < 2 || cfg.n > side) fail("n must satisfy 2 <= n <= min(d_A, d_B)");
            if (cfg.k > pair_count(cfg.n)) fail("K must be at most n(n-1)/2");
            break;
        case Theorem::T3:
            if (cfg.k + 1 > max_negative_count_bound(cfg.dims)) fail("K must be at most p_Y0 - 1");
            break;
        case Theorem::OpenQ:
            if (!bipartite) fail("needs a two-party system");
            if (cfg.n < 2 || cfg.n > side) fail("n must satisfy 2 <= n <= min(d_A, d_B)");
            // K is unbounded here; open_question_scan fixes K = n(n-1)/2.
            break;
    }
}

TrialSummary run_trials(const TrialConfig& cfg) {
    return run_campaign(cfg, [](std::size_t, const TrialOutcome&) {});
}

ClassificationReport example1_check() {
    const MixtureSpec spec = example1_mixture();
    return classify(mix(spec), Bipartition::first_of(spec.dims()));
}

bool example1_expected(const ClassificationReport& rep) {
    return rep.label == PptLabel::PPT && rep.min_eigenvalue >= 1e-5 && rep.min_eigenvalue <= 1e-4;
}

HorodeckiSweep horodecki_sweep(double alpha_min, double alpha_max, std::size_t steps, double tol) {
    if (!(alpha_min >= 2.0 && alpha_max <= 5.0 && alpha_min <= alpha_max)) {
        throw Error(ErrorCode::AlphaOutOfRange, "sweep range must lie within [2, 5]");
    }
    if (steps == 0) {
        throw Error(ErrorCode::InvalidConfig, "sweep needs at least one step");
    }
    const Bipartition cut = Bipartition::first_of(DimsSpec({3, 3}));
    const auto eval = [&](double alpha) { return classify(horodecki(alpha), cut, tol); };

    HorodeckiSweep sweep;
    for (std::size_t i = 0; i < steps; ++i) {
        const double alpha =
            steps == 1 ? alpha_min
                       : alpha_min + (alpha_max - alpha_min) * static_cast<double>(i) / static_cast<double>(steps - 1);
        const ClassificationReport rep = eval(alpha);
        sweep.rows.push_back({alpha, rep.min_eigenvalue, rep.label});
    }
    for (std::size_t i = 0; i + 1 < sweep.rows.size(); ++i) {
        if (sweep.rows[i].label == sweep.rows[i + 1].label) {
            continue;
        }
        // Bisection keeps lo on the side of row i's label.
        double lo = sweep.rows[i].alpha;
        double hi = sweep.rows[i + 1].alpha;
        const PptLabel lo_label = sweep.rows[i].label;
        while (hi - lo > 1e-6) {
            const double mid = 0.5 * (lo + hi);
            (eval(mid).label == lo_label ? lo : hi) = mid;
        }
        sweep.boundaries.push_back(0.5 * (lo + hi));
    }
    return sweep;
}

OpenScanResult open_question_scan(std::size_t n, const DimsSpec& dims, std::size_t trials,
                                  std::uint64_t master_seed, double tol) {
    TrialConfig cfg;
    cfg.theorem = Theorem::OpenQ;
    cfg.dims = dims;
    cfg.n = n;
    cfg.k = pair_count(n);
    cfg.trials = trials;
    cfg.master_seed = master_seed;
    cfg.tolerance = tol;

    OpenScanResult result;
    result.summary = run_campaign(cfg, [&](std::size_t t, const TrialOutcome& out) {
        if (!out.ppt_state) {
            return;
        }
        ++result.flagged;
        const Bipartition part = Bipartition::first_of(dims);
        if (classify(mix(*out.ppt_state), part, kRecheckTol).label == PptLabel::PPT) {
            result.counterexamples.push_back(*out.ppt_state);
            result.counterexample_trials.push_back(t);
        }
    });
    return result;
}

}  // namespace pptcert
