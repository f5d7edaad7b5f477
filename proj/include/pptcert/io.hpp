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

#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "pptcert/harness.hpp"
#include "pptcert/ppt.hpp"
#include "pptcert/qstate.hpp"
#include "pptcert/witness.hpp"

// File formats. Complex numbers are [re, im] pairs of decimal doubles.
//
//   state     {"dims":[3,3],"amplitudes":[[re,im],...]}
//   density   {"dims":[...],"matrix":[[[re,im],...],...]}
//   mixture   {"weights":[...],"components":[<state or density>, <state>...]}
//   report    {"partition":[0],"min_eigenvalue":..,"negative_count":..,"label":"NPT","tolerance":..}
//   cert      {"xi":[[re,im],...],"partition":[..],"quad_value":..,"per_component":[..],
//              "tolerance":..,"decided_by":"witness"|"spectrum"}
//   sweep     CSV, header alpha,min_eig,label

namespace pptcert::io {

using nlohmann::json;

json to_json(const DimsSpec& dims);
json to_json(const PureState& psi);
json to_json(const DensityMatrix& rho);
json to_json(const MixtureSpec& spec);
json to_json(const ClassificationReport& rep);
json to_json(const CertifyOutcome& outcome);
json to_json(const TrialSummary& summary);
json to_json(const OpenScanResult& scan);

/// Parse errors throw Error(Parse) naming `where` and the offending field.
PureState pure_from_json(const json& j, const std::string& where = "state");
DensityMatrix density_from_json(const json& j, const std::string& where = "density");
/// A state document may hold either a pure state or a density matrix.
std::variant<PureState, DensityMatrix> any_state_from_json(const json& j, const std::string& where = "state");
MixtureSpec mixture_from_json(const json& j, const std::string& where = "mixture");

std::string sweep_csv(const HorodeckiSweep& sweep);

/// Shortest decimal that round-trips.
std::string format_double(double v);

json read_json_file(const std::string& path);
/// Writes via a temporary sibling and rename().
void write_file_atomic(const std::string& path, const std::string& contents);
/// Pretty-printed JSON with a trailing newline.
std::string dump(const json& j);

}  // namespace pptcert::io
