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

#ifndef ATQC_BINARY_MATRIX_H
#define ATQC_BINARY_MATRIX_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace atqc {

/// Fixed-length vector over GF(2), bit-packed into 64-bit words.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t size);

    /// Sets the listed positions; repeated positions cancel (mod 2).
    static BitVector from_indices(size_t size, std::span<const int> positions);
    /// Parses a string of '0'/'1' characters.
    static BitVector from_string(std::string_view bits);

    size_t size() const {
        return size_;
    }
    bool get(size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(size_t i, bool value = true);
    void flip(size_t i) {
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }

    size_t weight() const;
    bool any() const;
    bool none() const {
        return !any();
    }
    /// GF(2) inner product.
    bool dot(const BitVector &other) const;

    BitVector &operator^=(const BitVector &other);
    friend BitVector operator^(BitVector a, const BitVector &b) {
        a ^= b;
        return a;
    }
    bool operator==(const BitVector &other) const = default;

    /// Set positions in increasing order.
    std::vector<int> indices() const;
    std::string str() const;

    std::span<uint64_t> words() {
        return words_;
    }
    std::span<const uint64_t> words() const {
        return words_;
    }

   private:
    size_t size_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense matrix over GF(2); rows are BitVectors of length cols().
class BinaryMatrix {
   public:
    BinaryMatrix() = default;
    BinaryMatrix(size_t rows, size_t cols);
    static BinaryMatrix from_rows(size_t cols, std::vector<BitVector> rows);
    static BinaryMatrix identity(size_t n);

    size_t rows() const {
        return rows_.size();
    }
    size_t cols() const {
        return cols_;
    }

    bool get(size_t r, size_t c) const {
        return rows_[r].get(c);
    }
    void set(size_t r, size_t c, bool value = true) {
        rows_[r].set(c, value);
    }
    void flip(size_t r, size_t c) {
        rows_[r].flip(c);
    }

    const BitVector &row(size_t r) const {
        return rows_[r];
    }
    BitVector &row(size_t r) {
        return rows_[r];
    }
    const std::vector<BitVector> &row_vectors() const {
        return rows_;
    }

    BitVector column(size_t c) const;
    size_t column_weight(size_t c) const;

    BinaryMatrix transposed() const;
    /// Matrix product over GF(2); throws on dimension mismatch.
    BinaryMatrix operator*(const BinaryMatrix &rhs) const;
    /// this * v.
    BitVector apply(const BitVector &v) const;

    bool is_zero() const;
    size_t rank() const;
    /// Basis of {v : this * v = 0}.
    std::vector<BitVector> kernel_basis() const;
    /// Whether v is a GF(2) combination of the rows.
    bool in_row_space(const BitVector &v) const;
    /// Inverse of a square full-rank matrix; throws otherwise.
    BinaryMatrix inverse() const;

    bool operator==(const BinaryMatrix &other) const = default;

   private:
    size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

/// Incrementally built echelon basis supporting membership queries.
class RowSpace {
   public:
    explicit RowSpace(size_t cols) : cols_(cols) {}

    /// Adds v to the span; returns false (and leaves the span unchanged) if v was already in it.
    bool insert(const BitVector &v);
    /// Residual of v after elimination against the basis; zero iff v is in the span.
    BitVector reduce(BitVector v) const;
    bool contains(const BitVector &v) const {
        return reduce(v).none();
    }
    size_t dimension() const {
        return basis_.size();
    }
    size_t cols() const {
        return cols_;
    }

   private:
    size_t cols_;
    std::vector<BitVector> basis_;
    std::vector<size_t> pivots_;
};

}  // namespace atqc

#endif
