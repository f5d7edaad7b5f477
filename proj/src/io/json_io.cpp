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

#include "pptcert/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pptcert/error.hpp"

namespace pptcert::io {

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& field, const std::string& why) {
    throw Error(ErrorCode::Parse, where + ": field '" + field + "': " + why);
}

const json& field(const json& j, const char* name, const std::string& where) {
    if (!j.is_object()) {
        parse_fail(where, name, "document is not a JSON object");
    }
    const auto it = j.find(name);
    if (it == j.end()) {
        parse_fail(where, name, "missing");
    }
    return *it;
}

double number(const json& j, const std::string& where, const std::string& name) {
    if (!j.is_number()) {
        parse_fail(where, name, "expected a number");
    }
    return j.get<double>();
}

cplx complex_from(const json& j, const std::string& where, const std::string& name) {
    if (!j.is_array() || j.size() != 2) {
        parse_fail(where, name, "expected [re, im]");
    }
    return {number(j[0], where, name), number(j[1], where, name)};
}

json complex_to(cplx z) { return json::array({z.real(), z.imag()}); }

CVector cvector_from(const json& j, const std::string& where, const std::string& name) {
    if (!j.is_array()) {
        parse_fail(where, name, "expected an array of [re, im]");
    }
    CVector v;
    v.reserve(j.size());
    for (const auto& e : j) {
        v.push_back(complex_from(e, where, name));
    }
    return v;
}

json cvector_to(const CVector& v) {
    json a = json::array();
    for (const auto& z : v) {
        a.push_back(complex_to(z));
    }
    return a;
}

DimsSpec dims_from(const json& j, const std::string& where) {
    const json& d = field(j, "dims", where);
    if (!d.is_array()) {
        parse_fail(where, "dims", "expected an array of integers");
    }
    std::vector<std::size_t> dims;
    for (const auto& e : d) {
        if (!e.is_number_unsigned() && !(e.is_number_integer() && e.get<long long>() >= 0)) {
            parse_fail(where, "dims", "expected non-negative integers");
        }
        dims.push_back(e.get<std::size_t>());
    }
    try {
        return DimsSpec(std::move(dims));
    } catch (const Error& e) {
        parse_fail(where, "dims", e.what());
    }
}

json partition_to(const Bipartition& part) { return json(part.y()); }

}  // namespace

json to_json(const DimsSpec& dims) { return json(dims.dims()); }

json to_json(const PureState& psi) {
    return json{{"dims", to_json(psi.dims)}, {"amplitudes", cvector_to(psi.amplitudes)}};
}

json to_json(const DensityMatrix& rho) {
    json rows = json::array();
    for (std::size_t r = 0; r < rho.matrix.rows(); ++r) {
        json row = json::array();
        for (const auto& z : rho.matrix.row(r)) {
            row.push_back(complex_to(z));
        }
        rows.push_back(std::move(row));
    }
    return json{{"dims", to_json(rho.dims)}, {"matrix", std::move(rows)}};
}

json to_json(const MixtureSpec& spec) {
    json comps = json::array();
    comps.push_back(std::visit([](const auto& h) { return to_json(h); }, spec.head));
    for (const auto& c : spec.tail) {
        comps.push_back(to_json(c));
    }
    return json{{"weights", spec.weights}, {"components", std::move(comps)}};
}

json to_json(const ClassificationReport& rep) {
    return json{{"partition", partition_to(rep.partition)},
                {"min_eigenvalue", rep.min_eigenvalue},
                {"negative_count", rep.negative_count},
                {"label", to_string(rep.label)},
                {"tolerance", rep.tolerance}};
}

json to_json(const CertifyOutcome& outcome) {
    json j;
    if (outcome.certificate) {
        const auto& c = *outcome.certificate;
        j["xi"] = cvector_to(c.xi);
        j["partition"] = partition_to(c.partition);
        j["quad_value"] = c.quad_value;
        j["per_component"] = c.per_component;
        j["tolerance"] = c.tolerance;
        j["decided_by"] = to_string(DecidedBy::Witness);
        j["label"] = "NPT";
        return j;
    }
    const auto& s = outcome.spectrum.value();
    j["xi"] = json::array();
    j["partition"] = partition_to(s.partition);
    j["quad_value"] = nullptr;
    j["per_component"] = json::array();
    j["tolerance"] = s.tolerance;
    j["decided_by"] = to_string(DecidedBy::Spectrum);
    j["label"] = to_string(s.label);
    j["min_eigenvalue"] = s.min_eigenvalue;
    return j;
}

json to_json(const TrialSummary& summary) {
    const auto& cfg = summary.config;
    json failures = json::array();
    for (const auto& f : summary.failures) {
        failures.push_back(json{{"trial", f.trial},
                                {"seed", f.seed},
                                {"min_eigenvalue", f.min_eigenvalue},
                                {"witness_found", f.witness_found},
                                {"reason", f.reason}});
    }
    return json{{"theorem", to_string(cfg.theorem)},
                {"dims", to_json(cfg.dims)},
                {"n", cfg.n},
                {"k", cfg.k},
                {"trials", cfg.trials},
                {"master_seed", cfg.master_seed},
                {"tolerance", cfg.tolerance},
                {"total", summary.total},
                {"passed", summary.passed},
                {"failed", summary.failed},
                {"witness_count", summary.witness_count},
                {"failures", std::move(failures)}};
}

json to_json(const OpenScanResult& scan) {
    json j = to_json(scan.summary);
    j["flagged"] = scan.flagged;
    j["counterexamples"] = scan.counterexamples.size();
    j["counterexample_trials"] = scan.counterexample_trials;
    json states = json::array();
    for (const auto& s : scan.counterexamples) {
        states.push_back(to_json(s));
    }
    j["counterexample_states"] = std::move(states);
    return j;
}

PureState pure_from_json(const json& j, const std::string& where) {
    const DimsSpec dims = dims_from(j, where);
    const CVector amps = cvector_from(field(j, "amplitudes", where), where, "amplitudes");
    try {
        return make_pure(amps, dims);
    } catch (const Error& e) {
        parse_fail(where, "amplitudes", e.what());
    }
}

DensityMatrix density_from_json(const json& j, const std::string& where) {
    const DimsSpec dims = dims_from(j, where);
    const json& rows = field(j, "matrix", where);
    if (!rows.is_array() || rows.size() != dims.total()) {
        parse_fail(where, "matrix", "expected " + std::to_string(dims.total()) + " rows");
    }
    ComplexMatrix m(dims.total(), dims.total());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const CVector row = cvector_from(rows[r], where, "matrix");
        if (row.size() != dims.total()) {
            parse_fail(where, "matrix", "row " + std::to_string(r) + " has " + std::to_string(row.size()) + " entries");
        }
        std::copy(row.begin(), row.end(), m.row(r).begin());
    }
    try {
        return make_density(m, dims);
    } catch (const Error& e) {
        parse_fail(where, "matrix", e.what());
    }
}

std::variant<PureState, DensityMatrix> any_state_from_json(const json& j, const std::string& where) {
    if (j.is_object() && j.contains("matrix")) {
        return density_from_json(j, where);
    }
    return pure_from_json(j, where);
}

MixtureSpec mixture_from_json(const json& j, const std::string& where) {
    const json& w = field(j, "weights", where);
    if (!w.is_array()) {
        parse_fail(where, "weights", "expected an array of numbers");
    }
    MixtureSpec spec;
    for (const auto& e : w) {
        spec.weights.push_back(number(e, where, "weights"));
    }
    const json& comps = field(j, "components", where);
    if (!comps.is_array() || comps.empty()) {
        parse_fail(where, "components", "expected a non-empty array of states");
    }
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::string sub = where + ": components[" + std::to_string(i) + "]";
        if (i == 0) {
            spec.head = std::visit([](auto&& s) -> MixtureHead { return std::move(s); }, any_state_from_json(comps[i], sub));
        } else {
            spec.tail.push_back(pure_from_json(comps[i], sub));
        }
    }
    try {
        validate(spec);
    } catch (const Error& e) {
        parse_fail(where, "weights", e.what());
    }
    return spec;
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string sweep_csv(const HorodeckiSweep& sweep) {
    std::string out = "alpha,min_eig,label\n";
    for (const auto& row : sweep.rows) {
        out += format_double(row.alpha);
        out += ',';
        out += format_double(row.min_eigenvalue);
        out += ',';
        out += to_string(row.label);
        out += '\n';
    }
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Parse, path + ": cannot open file");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::Parse, path + ": malformed JSON: " + e.what());
    }
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(ErrorCode::InvalidConfig, tmp + ": cannot open for writing");
        }
        out << contents;
        if (!out.flush()) {
            throw Error(ErrorCode::InvalidConfig, tmp + ": write failed");
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw Error(ErrorCode::InvalidConfig, path + ": rename failed");
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace pptcert::io
