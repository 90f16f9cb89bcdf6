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

#include "atqc/binary_matrix.h"

#include <bit>

#include "atqc/bitkernels.h"
#include "atqc/error.h"

namespace atqc {

namespace {

size_t words_for(size_t bits) {
    return (bits + 63) / 64;
}

void require_same_size(const BitVector &a, const BitVector &b) {
    if (a.size() != b.size()) {
        throw_invalid(
            "bit vector length mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    }
}

// Index of the lowest set bit, or size() if none.
size_t lowest_set(const BitVector &v) {
    auto words = v.words();
    for (size_t w = 0; w < words.size(); w++) {
        if (words[w] != 0) {
            return w * 64 + static_cast<size_t>(std::countr_zero(words[w]));
        }
    }
    return v.size();
}

}  // namespace

BitVector::BitVector(size_t size) : size_(size), words_(words_for(size), 0) {
}

BitVector BitVector::from_indices(size_t size, std::span<const int> positions) {
    BitVector v(size);
    for (int p : positions) {
        if (p < 0 || static_cast<size_t>(p) >= size) {
            throw_invalid("bit position " + std::to_string(p) + " out of range for length " + std::to_string(size));
        }
        v.flip(static_cast<size_t>(p));
    }
    return v;
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw_invalid(std::string("expected '0' or '1', got '") + bits[i] + "'");
        }
    }
    return v;
}

void BitVector::set(size_t i, bool value) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

size_t BitVector::weight() const {
    return simd::active_kernels().popcount(words_.data(), words_.size());
}

bool BitVector::any() const {
    return simd::active_kernels().any(words_.data(), words_.size());
}

bool BitVector::dot(const BitVector &other) const {
    require_same_size(*this, other);
    return simd::active_kernels().and_parity(words_.data(), other.words_.data(), words_.size());
}

BitVector &BitVector::operator^=(const BitVector &other) {
    require_same_size(*this, other);
    simd::active_kernels().xor_into(words_.data(), other.words_.data(), words_.size());
    return *this;
}

std::vector<int> BitVector::indices() const {
    std::vector<int> out;
    for (size_t w = 0; w < words_.size(); w++) {
        uint64_t bits = words_[w];
        while (bits != 0) {
            out.push_back(static_cast<int>(w * 64 + static_cast<size_t>(std::countr_zero(bits))));
            bits &= bits - 1;
        }
    }
    return out;
}

std::string BitVector::str() const {
    std::string out(size_, '0');
    for (size_t i = 0; i < size_; i++) {
        if (get(i)) {
            out[i] = '1';
        }
    }
    return out;
}

BinaryMatrix::BinaryMatrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {
}

BinaryMatrix BinaryMatrix::from_rows(size_t cols, std::vector<BitVector> rows) {
    for (const auto &r : rows) {
        if (r.size() != cols) {
            throw_invalid("row length " + std::to_string(r.size()) + " does not match column count " +
                          std::to_string(cols));
        }
    }
    BinaryMatrix m;
    m.cols_ = cols;
    m.rows_ = std::move(rows);
    return m;
}

BinaryMatrix BinaryMatrix::identity(size_t n) {
    BinaryMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i);
    }
    return m;
}

BitVector BinaryMatrix::column(size_t c) const {
    BitVector out(rows());
    for (size_t r = 0; r < rows(); r++) {
        if (get(r, c)) {
            out.set(r);
        }
    }
    return out;
}

size_t BinaryMatrix::column_weight(size_t c) const {
    size_t w = 0;
    for (const auto &r : rows_) {
        w += r.get(c);
    }
    return w;
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix t(cols_, rows());
    for (size_t r = 0; r < rows(); r++) {
        for (int c : rows_[r].indices()) {
            t.set(static_cast<size_t>(c), r);
        }
    }
    return t;
}

BinaryMatrix BinaryMatrix::operator*(const BinaryMatrix &rhs) const {
    if (cols_ != rhs.rows()) {
        throw_invalid("matrix product dimension mismatch: " + std::to_string(rows()) + "x" +
                      std::to_string(cols_) + " times " + std::to_string(rhs.rows()) + "x" +
                      std::to_string(rhs.cols()));
    }
    // Row r of the product is the XOR of rhs rows selected by row r of this.
    BinaryMatrix out(rows(), rhs.cols());
    for (size_t r = 0; r < rows(); r++) {
        for (int k : rows_[r].indices()) {
            out.rows_[r] ^= rhs.rows_[static_cast<size_t>(k)];
        }
    }
    return out;
}

BitVector BinaryMatrix::apply(const BitVector &v) const {
    if (v.size() != cols_) {
        throw_invalid("matrix-vector dimension mismatch: " + std::to_string(cols_) + " columns, vector length " +
                      std::to_string(v.size()));
    }
    BitVector out(rows());
    for (size_t r = 0; r < rows(); r++) {
        if (rows_[r].dot(v)) {
            out.set(r);
        }
    }
    return out;
}

bool BinaryMatrix::is_zero() const {
    for (const auto &r : rows_) {
        if (r.any()) {
            return false;
        }
    }
    return true;
}

size_t BinaryMatrix::rank() const {
    RowSpace space(cols_);
    for (const auto &r : rows_) {
        space.insert(r);
    }
    return space.dimension();
}

std::vector<BitVector> BinaryMatrix::kernel_basis() const {
    // Reduced row echelon form, then one basis vector per free column.
    std::vector<BitVector> work = rows_;
    std::vector<size_t> pivot_cols;
    size_t next_row = 0;
    for (size_t c = 0; c < cols_ && next_row < work.size(); c++) {
        size_t found = next_row;
        while (found < work.size() && !work[found].get(c)) {
            found++;
        }
        if (found == work.size()) {
            continue;
        }
        std::swap(work[found], work[next_row]);
        for (size_t r = 0; r < work.size(); r++) {
            if (r != next_row && work[r].get(c)) {
                work[r] ^= work[next_row];
            }
        }
        pivot_cols.push_back(c);
        next_row++;
    }

    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivot_cols) {
        is_pivot[c] = true;
    }
    std::vector<BitVector> basis;
    for (size_t free_col = 0; free_col < cols_; free_col++) {
        if (is_pivot[free_col]) {
            continue;
        }
        BitVector v(cols_);
        v.set(free_col);
        for (size_t i = 0; i < pivot_cols.size(); i++) {
            if (work[i].get(free_col)) {
                v.set(pivot_cols[i]);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool BinaryMatrix::in_row_space(const BitVector &v) const {
    if (v.size() != cols_) {
        throw_invalid("row-space query of length " + std::to_string(v.size()) + " against " +
                      std::to_string(cols_) + " columns");
    }
    RowSpace space(cols_);
    for (const auto &r : rows_) {
        space.insert(r);
    }
    return space.contains(v);
}

BinaryMatrix BinaryMatrix::inverse() const {
    size_t n = rows();
    if (n != cols_) {
        throw_invalid("inverse of a non-square matrix");
    }
    std::vector<BitVector> left = rows_;
    std::vector<BitVector> right = identity(n).rows_;
    for (size_t c = 0; c < n; c++) {
        size_t found = c;
        while (found < n && !left[found].get(c)) {
            found++;
        }
        if (found == n) {
            throw_invalid("matrix is singular over GF(2)");
        }
        std::swap(left[found], left[c]);
        std::swap(right[found], right[c]);
        for (size_t r = 0; r < n; r++) {
            if (r != c && left[r].get(c)) {
                left[r] ^= left[c];
                right[r] ^= right[c];
            }
        }
    }
    return from_rows(n, std::move(right));
}

bool RowSpace::insert(const BitVector &v) {
    if (v.size() != cols_) {
        throw_invalid("row-space insert of length " + std::to_string(v.size()) + " into " + std::to_string(cols_) +
                      " columns");
    }
    BitVector residual = reduce(v);
    size_t pivot = lowest_set(residual);
    if (pivot == residual.size()) {
        return false;
    }
    basis_.push_back(std::move(residual));
    pivots_.push_back(pivot);
    return true;
}

BitVector RowSpace::reduce(BitVector v) const {
    if (v.size() != cols_) {
        throw_invalid("row-space query of length " + std::to_string(v.size()) + " against " +
                      std::to_string(cols_) + " columns");
    }
    // Each stored vector is zero at the pivots of all earlier ones, so one pass suffices.
    for (size_t i = 0; i < basis_.size(); i++) {
        if (v.get(pivots_[i])) {
            v ^= basis_[i];
        }
    }
    return v;
}

}  // namespace atqc
