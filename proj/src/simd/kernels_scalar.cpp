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

#include "kernels.hpp"

// Complex products are spelled out on real/imaginary parts: std::complex
// multiplication goes through the C99 Annex G NaN recovery path, which is
// both slow and not what the vector variants compute.

namespace pptcert::simd::detail {

namespace {

inline cplx mul(cplx a, cplx x) {
    return {a.real() * x.real() - a.imag() * x.imag(), a.real() * x.imag() + a.imag() * x.real()};
}

}  // namespace

cplx dot_conj_scalar(const cplx* x, const cplx* y, std::size_t n) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
    }
    return {re, im};
}

double norm_sq_scalar(const cplx* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    }
    return acc;
}

void axpy_scalar(cplx* y, const cplx* x, cplx alpha, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] += mul(alpha, x[i]);
    }
}

void rotate_pair_scalar(cplx* x, cplx* y, cplx a, cplx b, cplx c, cplx d, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const cplx xi = x[i];
        const cplx yi = y[i];
        x[i] = mul(a, xi) + mul(b, yi);
        y[i] = mul(c, xi) + mul(d, yi);
    }
}

}  // namespace pptcert::simd::detail
