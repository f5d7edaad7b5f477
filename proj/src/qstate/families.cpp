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

PureState psi_plus_3x3() {
    const DimsSpec dims({3, 3});
    CVector amps(9);
    amps[0] = amps[4] = amps[8] = 1.0 / std::sqrt(3.0);
    return make_pure(amps, dims);
}

DensityMatrix horodecki(double alpha) {
    if (!(alpha >= 2.0 && alpha <= 5.0)) {
        throw Error(ErrorCode::AlphaOutOfRange, "alpha = " + std::to_string(alpha) + " outside [2, 5]");
    }
    DensityMatrix sigma = to_density(psi_plus_3x3());
    sigma.matrix *= 2.0 / 7.0;
    // |01>, |12>, |20> carry alpha/21; |10>, |21>, |02> carry (5 - alpha)/21.
    for (std::size_t flat : {1u, 5u, 6u}) {
        sigma.matrix(flat, flat) += alpha / 21.0;
    }
    for (std::size_t flat : {3u, 7u, 2u}) {
        sigma.matrix(flat, flat) += (5.0 - alpha) / 21.0;
    }
    return sigma;
}

MixtureSpec example1_mixture() {
    const DimsSpec dims({3, 3});
    const Bipartition cut = Bipartition::first_of(dims);

    CVector chi0(9);
    chi0[0] = 0.5;
    chi0[4] = 0.8;
    chi0[8] = std::sqrt(0.11);

    const auto product = [&](CVector a, CVector b) { return product_pure(a, b, cut); };
    MixtureSpec spec;
    spec.weights = {0.01, 0.6, 0.09, 0.15, 0.15};
    spec.head = make_pure(chi0, dims);
    spec.tail = {
        product({0.4, -0.6, std::sqrt(0.48)}, {0.3, 0.95, std::sqrt(0.0075)}),
        product({0.27, 0.5, std::sqrt(0.6771)}, {-0.75, -0.1, std::sqrt(0.4275)}),
        product({-0.2, 0.4, std::sqrt(0.8)}, {-0.05, 0.01, -std::sqrt(0.9974)}),
        product({0.2, 0.6, -std::sqrt(0.6)}, {0.8, -0.55, -std::sqrt(0.0575)}),
    };
    return spec;
}

}  // namespace pptcert
