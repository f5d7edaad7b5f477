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

#include "pptcert/error.hpp"

namespace pptcert {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::WeightMismatch: return "WeightMismatch";
        case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
        case ErrorCode::BadRank: return "BadRank";
        case ErrorCode::BadCoefficients: return "BadCoefficients";
        case ErrorCode::NotSeparableInput: return "NotSeparableInput";
        case ErrorCode::WrongSchmidtNumber: return "WrongSchmidtNumber";
        case ErrorCode::NotProduct: return "NotProduct";
        case ErrorCode::InvalidState: return "InvalidState";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

}  // namespace pptcert
