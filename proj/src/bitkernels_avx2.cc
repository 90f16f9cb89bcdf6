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

// Compiled with -mavx2 -mpopcnt. Nothing here may be called unless
// avx2_kernels() confirmed CPU support.

#include <immintrin.h>

#include "atqc/bitkernels.h"

namespace atqc::simd {

namespace {

void avx2_xor_into(uint64_t *dst, const uint64_t *src, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst + i), _mm256_xor_si256(d, s));
    }
    for (; i < n; i++) {
        dst[i] ^= src[i];
    }
}

// Nibble lookup popcount (Mula et al.), accumulated with SAD into 64-bit lanes.
inline __m256i popcount_bytes(__m256i v) {
    const __m256i lookup = _mm256_setr_epi8(
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
}

size_t avx2_popcount(const uint64_t *words, size_t n) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(words + i));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(v), _mm256_setzero_si256()));
    }
    size_t total = static_cast<size_t>(_mm256_extract_epi64(acc, 0)) +
                   static_cast<size_t>(_mm256_extract_epi64(acc, 1)) +
                   static_cast<size_t>(_mm256_extract_epi64(acc, 2)) +
                   static_cast<size_t>(_mm256_extract_epi64(acc, 3));
    for (; i < n; i++) {
        total += static_cast<size_t>(_mm_popcnt_u64(words[i]));
    }
    return total;
}

bool avx2_and_parity(const uint64_t *a, const uint64_t *b, size_t n) {
    // parity(sum popcount(a_i & b_i)) == parity(popcount(xor_i (a_i & b_i)))
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(b + i));
        acc = _mm256_xor_si256(acc, _mm256_and_si256(va, vb));
    }
    uint64_t folded = static_cast<uint64_t>(_mm256_extract_epi64(acc, 0)) ^
                      static_cast<uint64_t>(_mm256_extract_epi64(acc, 1)) ^
                      static_cast<uint64_t>(_mm256_extract_epi64(acc, 2)) ^
                      static_cast<uint64_t>(_mm256_extract_epi64(acc, 3));
    for (; i < n; i++) {
        folded ^= a[i] & b[i];
    }
    return _mm_popcnt_u64(folded) & 1;
}

bool avx2_any(const uint64_t *words, size_t n) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i *>(words + i)));
    }
    if (!_mm256_testz_si256(acc, acc)) {
        return true;
    }
    for (; i < n; i++) {
        if (words[i] != 0) {
            return true;
        }
    }
    return false;
}

}  // namespace

extern const BitKernels kAvx2Kernels;
const BitKernels kAvx2Kernels{Backend::kAvx2, avx2_xor_into, avx2_popcount, avx2_and_parity, avx2_any};

}  // namespace atqc::simd
