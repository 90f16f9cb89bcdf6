// Copyright 2026 The atqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "atqc/bitkernels.h"

#include <bit>
#include <cstdlib>
#include <cstring>

namespace atqc::simd {

#if defined(ATQC_HAVE_AVX2_KERNELS)
// Defined in bitkernels_avx2.cc, which is the only translation unit built with -mavx2.
extern const BitKernels kAvx2Kernels;
#endif

namespace {

void scalar_xor_into(uint64_t *dst, const uint64_t *src, size_t n) {
    for (size_t i = 0; i < n; i++) {
        dst[i] ^= src[i];
    }
}

size_t scalar_popcount(const uint64_t *words, size_t n) {
    size_t total = 0;
    for (size_t i = 0; i < n; i++) {
        total += std::popcount(words[i]);
    }
    return total;
}

bool scalar_and_parity(const uint64_t *a, const uint64_t *b, size_t n) {
    uint64_t acc = 0;
    for (size_t i = 0; i < n; i++) {
        acc ^= a[i] & b[i];
    }
    return std::popcount(acc) & 1;
}

bool scalar_any(const uint64_t *words, size_t n) {
    uint64_t acc = 0;
    for (size_t i = 0; i < n; i++) {
        acc |= words[i];
    }
    return acc != 0;
}

constexpr BitKernels kScalarKernels{
    Backend::kScalar, scalar_xor_into, scalar_popcount, scalar_and_parity, scalar_any};

const BitKernels &resolve() {
    const char *forced = std::getenv("ATQC_SIMD");
    if (forced != nullptr && std::strcmp(forced, "scalar") == 0) {
        return kScalarKernels;
    }
    if (const BitKernels *fast = avx2_kernels()) {
        return *fast;
    }
    return kScalarKernels;
}

}  // namespace

const BitKernels &scalar_kernels() {
    return kScalarKernels;
}

const BitKernels *avx2_kernels() {
#if defined(ATQC_HAVE_AVX2_KERNELS)
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
    return supported ? &kAvx2Kernels : nullptr;
#else
    return nullptr;
#endif
}

const BitKernels &active_kernels() {
    static const BitKernels &chosen = resolve();
    return chosen;
}

std::string_view backend_name(Backend backend) {
    switch (backend) {
        case Backend::kScalar:
            return "scalar";
        case Backend::kAvx2:
            return "avx2";
    }
    return "unknown";
}

}  // namespace atqc::simd
