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
#include <string>

#include "pptcert/error.hpp"
#include "pptcert/qstate.hpp"

namespace pptcert {

DimsSpec::DimsSpec(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.size() < 2) {
        throw Error(ErrorCode::InvalidState, "need at least two subsystems, got " + std::to_string(dims_.size()));
    }
    for (std::size_t d : dims_) {
        if (d < 2) {
            throw Error(ErrorCode::InvalidState, "subsystem dimension " + std::to_string(d) + " < 2");
        }
    }
    strides_.assign(dims_.size(), 1);
    for (std::size_t i = dims_.size() - 1; i-- > 0;) {
        strides_[i] = strides_[i + 1] * dims_[i + 1];
    }
    total_ = strides_[0] * dims_[0];
}

namespace {

std::vector<std::size_t> side_offsets(const DimsSpec& dims, const std::vector<std::size_t>& side) {
    std::vector<std::size_t> offsets{0};
    for (std::size_t s : side) {
        std::vector<std::size_t> next;
        next.reserve(offsets.size() * dims[s]);
        for (std::size_t base : offsets) {
            for (std::size_t digit = 0; digit < dims[s]; ++digit) {
                next.push_back(base + digit * dims.stride(s));
            }
        }
        offsets = std::move(next);
    }
    return offsets;
}

}  // namespace

Bipartition::Bipartition(DimsSpec dims, std::vector<std::size_t> y) : dims_(std::move(dims)), y_(std::move(y)) {
    const std::size_t m = dims_.subsystems();
    std::sort(y_.begin(), y_.end());
    if (y_.empty() || y_.size() >= m) {
        throw Error(ErrorCode::InvalidState, "partition must be a nonempty proper subset of the subsystems");
    }
    if (std::adjacent_find(y_.begin(), y_.end()) != y_.end()) {
        throw Error(ErrorCode::InvalidState, "partition lists a subsystem twice");
    }
    if (y_.back() >= m) {
        throw Error(ErrorCode::InvalidState,
                    "partition index " + std::to_string(y_.back()) + " out of range for " + std::to_string(m) +
                        " subsystems");
    }
    for (std::size_t s = 0; s < m; ++s) {
        if (!std::binary_search(y_.begin(), y_.end(), s)) {
            ybar_.push_back(s);
        }
    }
    y_offset_ = side_offsets(dims_, y_);
    ybar_offset_ = side_offsets(dims_, ybar_);
    y_of_flat_.resize(dims_.total());
    ybar_of_flat_.resize(dims_.total());
    for (std::size_t iy = 0; iy < y_offset_.size(); ++iy) {
        for (std::size_t ib = 0; ib < ybar_offset_.size(); ++ib) {
            const std::size_t flat = y_offset_[iy] + ybar_offset_[ib];
            y_of_flat_[flat] = iy;
            ybar_of_flat_[flat] = ib;
        }
    }
}

}  // namespace pptcert
