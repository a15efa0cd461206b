// Copyright 2026 The hypsurf Authors
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

#ifndef HYPSURF_BITMATRIX_H
#define HYPSURF_BITMATRIX_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hypsurf {

/// Fixed-length vector over GF(2), packed 64 bits per word.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t size) : size_(size), words_((size + 63) / 64, 0) {
    }
    static BitVec from_support(size_t size, std::span<const uint32_t> support);

    size_t size() const {
        return size_;
    }
    bool get(size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(size_t i, bool value = true) {
        uint64_t mask = uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(size_t i) {
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }

    BitVec &operator^=(const BitVec &other);
    BitVec operator^(const BitVec &other) const {
        BitVec out = *this;
        out ^= other;
        return out;
    }
    bool operator==(const BitVec &other) const = default;
    /// Lexicographic order on the sorted support lists.
    bool support_less(const BitVec &other) const;

    size_t popcount() const;
    bool any() const;
    bool none() const {
        return !any();
    }
    /// Parity of the overlap, i.e. the GF(2) inner product.
    bool dot(const BitVec &other) const;
    /// Lowest set index, or size() if empty.
    size_t first_set() const;
    std::vector<uint32_t> support() const;

    std::span<const uint64_t> words() const {
        return words_;
    }
    std::span<uint64_t> words() {
        return words_;
    }

   private:
    size_t size_ = 0;
    std::vector<uint64_t> words_;
};

/// A GF(2) chain on cells of a fixed dimension; addition is symmetric difference.
using Chain = BitVec;

class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {
    }
    /// One support list per row.
    static BitMatrix from_rows(size_t cols, const std::vector<std::vector<uint32_t>> &rows);
    static BitMatrix identity(size_t n);

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
    const BitVec &row(size_t r) const {
        return rows_[r];
    }
    BitVec &row(size_t r) {
        return rows_[r];
    }
    void append_row(BitVec row);

    BitMatrix transposed() const;
    /// this * v (v has cols() entries).
    BitVec multiply(const BitVec &v) const;
    /// this * other^T.
    BitMatrix multiply_transpose(const BitMatrix &other) const;
    bool is_zero() const;
    std::vector<std::vector<uint32_t>> row_supports() const;
    /// Column supports (the transpose's row supports).
    std::vector<std::vector<uint32_t>> col_supports() const;

    bool operator==(const BitMatrix &other) const = default;

   private:
    size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

/// Incrementally maintained echelon basis of a row space. Each stored vector
/// has a distinct pivot (its lowest set bit), and is reduced against all
/// vectors inserted before it.
class RowReducer {
   public:
    explicit RowReducer(size_t cols) : cols_(cols) {
    }

    /// Reduces `v` in place against the basis; the result is zero iff `v` was in
    /// the span.
    void reduce(BitVec &v) const;
    bool in_span(BitVec v) const {
        reduce(v);
        return v.none();
    }
    /// Adds `v` if independent; returns whether the rank grew.
    bool insert(BitVec v);
    size_t rank() const {
        return basis_.size();
    }
    const std::vector<BitVec> &basis() const {
        return basis_;
    }

   private:
    size_t cols_;
    std::vector<BitVec> basis_;
    std::vector<size_t> pivots_;
};

size_t rank(const BitMatrix &m);

/// Basis of {v : m v = 0}, one vector per free column of the reduced row
/// echelon form (pivots chosen lowest column first).
std::vector<Chain> kernel_basis(const BitMatrix &m);

/// True iff `c` is a GF(2) combination of the columns of `m`.
bool in_span(const BitMatrix &m, const Chain &c);

/// Inverse of a square matrix, or an empty matrix if singular.
BitMatrix inverse(const BitMatrix &m);

}  // namespace hypsurf

#endif
