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

#ifndef ATQC_BITKERNELS_H
#define ATQC_BITKERNELS_H

#include <cstddef>
#include <cstdint>
#include <string_view>

// Word-level GF(2) kernels used by the matrix and distance code. A scalar
// reference implementation is always available; an AVX2 variant is compiled
// on x86-64 and chosen at runtime when the CPU supports it. Setting the
// environment variable ATQC_SIMD=scalar forces the reference path.
namespace atqc::simd {

enum class Backend { kScalar, kAvx2 };

struct BitKernels {
    Backend backend;
    /// dst[i] ^= src[i] for i < n.
    void (*xor_into)(uint64_t *dst, const uint64_t *src, size_t n);
    /// Total number of set bits in words[0..n).
    size_t (*popcount)(const uint64_t *words, size_t n);
    /// Parity of popcount(a & b), i.e. the GF(2) inner product.
    bool (*and_parity)(const uint64_t *a, const uint64_t *b, size_t n);
    /// True when any word in [0, n) is nonzero.
    bool (*any)(const uint64_t *words, size_t n);
};

const BitKernels &scalar_kernels();

/// The AVX2 table, or nullptr when it was not compiled in or the CPU lacks AVX2.
const BitKernels *avx2_kernels();

/// Kernels selected for this process (resolved once, thread-safe).
const BitKernels &active_kernels();

std::string_view backend_name(Backend backend);

}  // namespace atqc::simd

#endif
