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

#include <complex>
#include <cstddef>
#include <string_view>

// Inner-loop kernels shared by the dense linear algebra. Every kernel has a
// portable scalar reference and, on x86-64, an AVX2+FMA variant. The variant
// is picked once at startup from CPUID; PPTCERT_SIMD=scalar forces the
// reference path.

namespace pptcert::simd {

using cplx = std::complex<double>;

enum class Backend { Scalar, Avx2 };

struct KernelTable {
    Backend backend;
    std::string_view name;

    /// sum_i conj(x[i]) * y[i]
    cplx (*dot_conj)(const cplx* x, const cplx* y, std::size_t n);

    /// sum_i |x[i]|^2
    double (*norm_sq)(const cplx* x, std::size_t n);

    /// y[i] += alpha * x[i]
    void (*axpy)(cplx* y, const cplx* x, cplx alpha, std::size_t n);

    /// (x, y) <- (a*x + b*y, c*x + d*y), elementwise. Plane rotations in the
    /// Jacobi solvers reduce to this on two contiguous rows.
    void (*rotate_pair)(cplx* x, cplx* y, cplx a, cplx b, cplx c, cplx d, std::size_t n);
};

const KernelTable& scalar_kernels() noexcept;

/// nullptr when the binary was built without AVX2 support or the CPU lacks it.
const KernelTable* avx2_kernels() noexcept;

/// Table used by the library.
const KernelTable& kernels() noexcept;

bool backend_available(Backend backend) noexcept;

/// Switches the library-wide table. Throws pptcert::Error if unavailable.
/// Intended for tests and benchmarks; not safe to call while other threads
/// are inside library code.
void set_backend(Backend backend);

Backend active_backend() noexcept;

}  // namespace pptcert::simd
