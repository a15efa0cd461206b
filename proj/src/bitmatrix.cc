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

#include "hypsurf/bitmatrix.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hypsurf {

BitVec BitVec::from_support(size_t size, std::span<const uint32_t> support) {
    BitVec v(size);
    for (uint32_t i : support) {
        if (i >= size) {
            throw std::out_of_range("support index out of range");
        }
        v.flip(i);
    }
    return v;
}

BitVec &BitVec::operator^=(const BitVec &other) {
    for (size_t i = 0; i < words_.size(); ++i) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

bool BitVec::support_less(const BitVec &other) const {
    auto a = support();
    auto b = other.support();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

size_t BitVec::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += static_cast<size_t>(std::popcount(w));
    }
    return total;
}

bool BitVec::any() const {
    return std::any_of(words_.begin(), words_.end(), [](uint64_t w) { return w != 0; });
}

bool BitVec::dot(const BitVec &other) const {
    uint64_t acc = 0;
    for (size_t i = 0; i < words_.size(); ++i) {
        acc ^= words_[i] & other.words_[i];
    }
    return std::popcount(acc) & 1;
}

size_t BitVec::first_set() const {
    for (size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] != 0) {
            return i * 64 + static_cast<size_t>(std::countr_zero(words_[i]));
        }
    }
    return size_;
}

std::vector<uint32_t> BitVec::support() const {
    std::vector<uint32_t> out;
    for (size_t i = 0; i < words_.size(); ++i) {
        uint64_t w = words_[i];
        while (w != 0) {
            out.push_back(static_cast<uint32_t>(i * 64 + static_cast<size_t>(std::countr_zero(w))));
            w &= w - 1;
        }
    }
    return out;
}

BitMatrix BitMatrix::from_rows(size_t cols, const std::vector<std::vector<uint32_t>> &rows) {
    BitMatrix m;
    m.cols_ = cols;
    for (const auto &r : rows) {
        m.rows_.push_back(BitVec::from_support(cols, r));
    }
    return m;
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) {
        m.set(i, i);
    }
    return m;
}

void BitMatrix::append_row(BitVec row) {
    if (row.size() != cols_) {
        throw std::invalid_argument("row length mismatch");
    }
    rows_.push_back(std::move(row));
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_.size());
    for (size_t r = 0; r < rows_.size(); ++r) {
        for (uint32_t c : rows_[r].support()) {
            t.set(c, r);
        }
    }
    return t;
}

BitVec BitMatrix::multiply(const BitVec &v) const {
    BitVec out(rows_.size());
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].dot(v)) {
            out.set(r);
        }
    }
    return out;
}

BitMatrix BitMatrix::multiply_transpose(const BitMatrix &other) const {
    BitMatrix out(rows_.size(), other.rows());
    for (size_t i = 0; i < rows_.size(); ++i) {
        for (size_t j = 0; j < other.rows(); ++j) {
            if (rows_[i].dot(other.row(j))) {
                out.set(i, j);
            }
        }
    }
    return out;
}

bool BitMatrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const BitVec &r) { return r.none(); });
}

std::vector<std::vector<uint32_t>> BitMatrix::row_supports() const {
    std::vector<std::vector<uint32_t>> out;
    out.reserve(rows_.size());
    for (const auto &r : rows_) {
        out.push_back(r.support());
    }
    return out;
}

std::vector<std::vector<uint32_t>> BitMatrix::col_supports() const {
    std::vector<std::vector<uint32_t>> out(cols_);
    for (size_t r = 0; r < rows_.size(); ++r) {
        for (uint32_t c : rows_[r].support()) {
            out[c].push_back(static_cast<uint32_t>(r));
        }
    }
    return out;
}

void RowReducer::reduce(BitVec &v) const {
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (v.get(pivots_[i])) {
            v ^= basis_[i];
        }
    }
}

bool RowReducer::insert(BitVec v) {
    if (v.size() != cols_) {
        throw std::invalid_argument("vector length mismatch");
    }
    reduce(v);
    size_t pivot = v.first_set();
    if (pivot == cols_) {
        return false;
    }
    pivots_.push_back(pivot);
    basis_.push_back(std::move(v));
    return true;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each leading
// row.
std::vector<size_t> rref(std::vector<BitVec> &rows, size_t cols) {
    std::vector<size_t> pivots;
    size_t next = 0;
    for (size_t c = 0; c < cols && next < rows.size(); ++c) {
        size_t found = next;
        while (found < rows.size() && !rows[found].get(c)) {
            ++found;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[found]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i != next && rows[i].get(c)) {
                rows[i] ^= rows[next];
            }
        }
        pivots.push_back(c);
        ++next;
    }
    return pivots;
}

}  // namespace

size_t rank(const BitMatrix &m) {
    RowReducer reducer(m.cols());
    for (size_t r = 0; r < m.rows(); ++r) {
        reducer.insert(m.row(r));
    }
    return reducer.rank();
}

std::vector<Chain> kernel_basis(const BitMatrix &m) {
    std::vector<BitVec> rows;
    rows.reserve(m.rows());
    for (size_t r = 0; r < m.rows(); ++r) {
        rows.push_back(m.row(r));
    }
    std::vector<size_t> pivots = rref(rows, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<Chain> basis;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        Chain v(m.cols());
        v.set(f);
        for (size_t i = 0; i < pivots.size(); ++i) {
            if (rows[i].get(f)) {
                v.set(pivots[i]);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_span(const BitMatrix &m, const Chain &c) {
    BitMatrix t = m.transposed();
    RowReducer reducer(t.cols());
    for (size_t r = 0; r < t.rows(); ++r) {
        reducer.insert(t.row(r));
    }
    return reducer.in_span(c);
}

BitMatrix inverse(const BitMatrix &m) {
    const size_t n = m.rows();
    if (m.cols() != n) {
        return {};
    }
    std::vector<BitVec> aug;
    for (size_t i = 0; i < n; ++i) {
        BitVec row(2 * n);
        for (uint32_t c : m.row(i).support()) {
            row.set(c);
        }
        row.set(n + i);
        aug.push_back(std::move(row));
    }
    std::vector<size_t> pivots = rref(aug, n);
    if (pivots.size() != n) {
        return {};
    }
    BitMatrix out(n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (aug[i].get(n + j)) {
                out.set(i, j);
            }
        }
    }
    return out;
}

}  // namespace hypsurf
