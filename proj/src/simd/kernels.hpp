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

#include "pptcert/simd.hpp"

// Internal: entry points of the per-ISA translation units.

namespace pptcert::simd::detail {

cplx dot_conj_scalar(const cplx* x, const cplx* y, std::size_t n);
double norm_sq_scalar(const cplx* x, std::size_t n);
void axpy_scalar(cplx* y, const cplx* x, cplx alpha, std::size_t n);
void rotate_pair_scalar(cplx* x, cplx* y, cplx a, cplx b, cplx c, cplx d, std::size_t n);

#if defined(PPTCERT_HAVE_AVX2)
cplx dot_conj_avx2(const cplx* x, const cplx* y, std::size_t n);
double norm_sq_avx2(const cplx* x, std::size_t n);
void axpy_avx2(cplx* y, const cplx* x, cplx alpha, std::size_t n);
void rotate_pair_avx2(cplx* x, cplx* y, cplx a, cplx b, cplx c, cplx d, std::size_t n);
#endif

}  // namespace pptcert::simd::detail
