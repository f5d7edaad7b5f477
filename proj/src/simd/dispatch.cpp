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

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "kernels.hpp"
#include "pptcert/error.hpp"

namespace pptcert::simd {

namespace {

constexpr KernelTable kScalar{
    Backend::Scalar,      "scalar",
    detail::dot_conj_scalar, detail::norm_sq_scalar,
    detail::axpy_scalar,  detail::rotate_pair_scalar,
};

#if defined(PPTCERT_HAVE_AVX2)
constexpr KernelTable kAvx2{
    Backend::Avx2,      "avx2",
    detail::dot_conj_avx2, detail::norm_sq_avx2,
    detail::axpy_avx2,  detail::rotate_pair_avx2,
};

bool cpu_has_avx2() noexcept {
    static const bool supported = [] {
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    }();
    return supported;
}
#endif

const KernelTable* initial_table() noexcept {
    if (const char* env = std::getenv("PPTCERT_SIMD"); env != nullptr && std::string_view(env) == "scalar") {
        return &kScalar;
    }
    if (const KernelTable* t = avx2_kernels()) {
        return t;
    }
    return &kScalar;
}

std::atomic<const KernelTable*>& active() noexcept {
    static std::atomic<const KernelTable*> table{initial_table()};
    return table;
}

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalar; }

const KernelTable* avx2_kernels() noexcept {
#if defined(PPTCERT_HAVE_AVX2)
    return cpu_has_avx2() ? &kAvx2 : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& kernels() noexcept { return *active().load(std::memory_order_acquire); }

bool backend_available(Backend backend) noexcept {
    return backend == Backend::Scalar || avx2_kernels() != nullptr;
}

void set_backend(Backend backend) {
    if (backend == Backend::Scalar) {
        active().store(&kScalar, std::memory_order_release);
        return;
    }
    const KernelTable* t = avx2_kernels();
    if (t == nullptr) {
        throw Error(ErrorCode::InvalidConfig, "AVX2 kernels are not available on this machine");
    }
    active().store(t, std::memory_order_release);
}

Backend active_backend() noexcept { return kernels().backend; }

}  // namespace pptcert::simd
