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

// Compiled with -mavx2 -mfma. Nothing in here may run before the dispatcher
// has confirmed CPU support.

#include "kernels.hpp"

#include <immintrin.h>

namespace pptcert::simd::detail {

namespace {

// A __m256d holds two complex numbers as [re0, im0, re1, im1].

inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }

inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

// alpha * v for a broadcast complex scalar given as (re, re, ..) and (im, im, ..).
inline __m256d cmul(__m256d ar, __m256d ai, __m256d v) {
    const __m256d swapped = _mm256_permute_pd(v, 0b0101);
    return _mm256_fmaddsub_pd(ar, v, _mm256_mul_pd(ai, swapped));
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

cplx dot_conj_avx2(const cplx* x, const cplx* y, std::size_t n) {
    // re = sum xr*yr + xi*yi; im = sum xr*yi - xi*yr
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = load2(x + i);
        const __m256d yv = load2(y + i);
        acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
        acc_im = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), acc_im);
    }
    // acc_im lanes are [xr*yi, xi*yr, ...]; even minus odd gives the imaginary part.
    alignas(32) double im_lanes[4];
    _mm256_store_pd(im_lanes, acc_im);
    double re = hsum(acc_re);
    double im = (im_lanes[0] - im_lanes[1]) + (im_lanes[2] - im_lanes[3]);
    for (; i < n; ++i) {
        re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
    }
    return {re, im};
}

double norm_sq_avx2(const cplx* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = load2(x + i);
        acc = _mm256_fmadd_pd(xv, xv, acc);
    }
    double out = hsum(acc);
    for (; i < n; ++i) {
        out += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    }
    return out;
}

void axpy_avx2(cplx* y, const cplx* x, cplx alpha, std::size_t n) {
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        store2(y + i, _mm256_add_pd(load2(y + i), cmul(ar, ai, load2(x + i))));
    }
    for (; i < n; ++i) {
        y[i] += cplx{alpha.real() * x[i].real() - alpha.imag() * x[i].imag(),
                     alpha.real() * x[i].imag() + alpha.imag() * x[i].real()};
    }
}

void rotate_pair_avx2(cplx* x, cplx* y, cplx a, cplx b, cplx c, cplx d, std::size_t n) {
    const __m256d ar = _mm256_set1_pd(a.real()), ai = _mm256_set1_pd(a.imag());
    const __m256d br = _mm256_set1_pd(b.real()), bi = _mm256_set1_pd(b.imag());
    const __m256d cr = _mm256_set1_pd(c.real()), ci = _mm256_set1_pd(c.imag());
    const __m256d dr = _mm256_set1_pd(d.real()), di = _mm256_set1_pd(d.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = load2(x + i);
        const __m256d yv = load2(y + i);
        store2(x + i, _mm256_add_pd(cmul(ar, ai, xv), cmul(br, bi, yv)));
        store2(y + i, _mm256_add_pd(cmul(cr, ci, xv), cmul(dr, di, yv)));
    }
    if (i < n) {
        rotate_pair_scalar(x + i, y + i, a, b, c, d, n - i);
    }
}

}  // namespace pptcert::simd::detail
