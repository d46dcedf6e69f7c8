// Copyright 2026 The bbshot Authors
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

#ifndef BBSHOT_GF2_MATRIX_H
#define BBSHOT_GF2_MATRIX_H

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bbshot/bitvec.h"
#include "bbshot/poly.h"

namespace bbshot {

/// Dense matrix over GF(2), stored as packed rows.
class GF2Matrix {
   public:
    GF2Matrix() = default;
    GF2Matrix(size_t nrows, size_t ncols);

    static GF2Matrix identity(size_t n);
    /// One row per string, characters '0'/'1'.
    static GF2Matrix from_strings(const std::vector<std::string> &rows);
    static GF2Matrix from_rows(size_t ncols, std::vector<BitVec> rows);
    /// Parses the '0'/'1' dump format (one row per line, blank lines ignored).
    static GF2Matrix parse(std::string_view text, size_t ncols_if_empty = 0);

    size_t nrows() const {
        return rows_.size();
    }
    size_t ncols() const {
        return ncols_;
    }
    const BitVec &row(size_t r) const {
        return rows_[r];
    }
    BitVec &row(size_t r) {
        return rows_[r];
    }
    const std::vector<BitVec> &rows() const {
        return rows_;
    }
    bool get(size_t r, size_t c) const {
        return rows_[r][c];
    }
    void set(size_t r, size_t c, bool v = true) {
        rows_[r].set(c, v);
    }
    void flip(size_t r, size_t c) {
        rows_[r].flip(c);
    }
    void append_row(BitVec row);

    GF2Matrix transpose() const;
    GF2Matrix operator*(const GF2Matrix &other) const;
    GF2Matrix operator^(const GF2Matrix &other) const;
    bool operator==(const GF2Matrix &other) const = default;
    bool is_zero() const;
    /// Column c as a vector of length nrows().
    BitVec column(size_t c) const;

    /// One row per line, characters '0'/'1'.
    std::string dump() const;

   private:
    size_t ncols_ = 0;
    std::vector<BitVec> rows_;
};

/// Row i has column j set iff the coefficient of z^((j - i) mod n) in p is 1.
GF2Matrix circulant(const PolyF2 &p, size_t n);

GF2Matrix hconcat(const GF2Matrix &left, const GF2Matrix &right);

size_t rank(const GF2Matrix &m);

/// Full-row-rank R with R * m = 0 and nrows(R) = nrows(m) - rank(m).
GF2Matrix left_nullspace_basis(const GF2Matrix &m);

/// Some x with m * x = s, or nullopt if none exists. Pivots are taken at the
/// leftmost nonzero column and free variables are set to zero.
std::optional<BitVec> solve(const GF2Matrix &m, const BitVec &s);

/// True iff v is a GF(2) combination of rows of m.
bool in_rowspace(const BitVec &v, const GF2Matrix &m);

BitVec matvec(const GF2Matrix &m, const BitVec &x);

/// In-place Gauss-Jordan elimination restricted to the first `active_cols`
/// columns: the pivot is the leftmost column with a nonzero entry at or below
/// the current row, and the topmost such row is swapped up. Returns the pivot
/// column of each leading row.
std::vector<size_t> row_reduce(std::vector<BitVec> &rows, size_t active_cols);

/// Reduced row echelon form of a fixed row space, for repeated membership
/// queries.
class RowSpaceReducer {
   public:
    explicit RowSpaceReducer(const GF2Matrix &m);

    size_t rank() const {
        return basis_.size();
    }
    /// Residue of v after eliminating every pivot column.
    BitVec reduce(BitVec v) const;
    bool contains(const BitVec &v) const {
        return reduce(v).none();
    }
    const std::vector<size_t> &pivots() const {
        return pivots_;
    }

   private:
    size_t ncols_;
    std::vector<BitVec> basis_;
    std::vector<size_t> pivots_;
};

}  // namespace bbshot

#endif
