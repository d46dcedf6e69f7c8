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

#include "bbshot/gf2_matrix.h"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace bbshot {

namespace {

std::vector<size_t> reduce_rows(std::vector<BitVec> &rows, size_t active_cols) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < active_cols && r < rows.size(); c++) {
        size_t found = rows.size();
        for (size_t i = r; i < rows.size(); i++) {
            if (rows[i][c]) {
                found = i;
                break;
            }
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[found]);
        for (size_t i = 0; i < rows.size(); i++) {
            if (i != r && rows[i][c]) {
                rows[i] ^= rows[r];
            }
        }
        pivots.push_back(c);
        r++;
    }
    return pivots;
}

// Copies rows with `extra` additional trailing columns.
std::vector<BitVec> widen(const GF2Matrix &m, size_t extra) {
    std::vector<BitVec> out;
    out.reserve(m.nrows());
    for (size_t i = 0; i < m.nrows(); i++) {
        BitVec row(m.ncols() + extra);
        for (size_t c : m.row(i).ones()) {
            row.set(c);
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace

GF2Matrix::GF2Matrix(size_t nrows, size_t ncols) : ncols_(ncols), rows_(nrows, BitVec(ncols)) {
}

GF2Matrix GF2Matrix::identity(size_t n) {
    GF2Matrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m.set(k, k);
    }
    return m;
}

GF2Matrix GF2Matrix::from_strings(const std::vector<std::string> &rows) {
    GF2Matrix m;
    m.ncols_ = rows.empty() ? 0 : rows[0].size();
    for (const auto &r : rows) {
        if (r.size() != m.ncols_) {
            throw std::invalid_argument("GF2Matrix::from_strings: ragged rows");
        }
        m.rows_.push_back(BitVec::from_string(r));
    }
    return m;
}

GF2Matrix GF2Matrix::from_rows(size_t ncols, std::vector<BitVec> rows) {
    GF2Matrix m;
    m.ncols_ = ncols;
    for (const auto &r : rows) {
        if (r.size() != ncols) {
            throw std::invalid_argument("GF2Matrix::from_rows: row length mismatch");
        }
    }
    m.rows_ = std::move(rows);
    return m;
}

GF2Matrix GF2Matrix::parse(std::string_view text, size_t ncols_if_empty) {
    std::vector<std::string> lines;
    std::string current;
    for (char ch : text) {
        if (ch == '\n') {
            if (!current.empty()) {
                lines.push_back(current);
            }
            current.clear();
        } else if (ch != '\r' && ch != ' ' && ch != '\t') {
            current.push_back(ch);
        }
    }
    if (!current.empty()) {
        lines.push_back(current);
    }
    if (lines.empty()) {
        return GF2Matrix(0, ncols_if_empty);
    }
    return from_strings(lines);
}

void GF2Matrix::append_row(BitVec row) {
    if (row.size() != ncols_) {
        throw std::invalid_argument("GF2Matrix::append_row: row length mismatch");
    }
    rows_.push_back(std::move(row));
}

GF2Matrix GF2Matrix::transpose() const {
    GF2Matrix t(ncols_, rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        for (size_t c : rows_[r].ones()) {
            t.set(c, r);
        }
    }
    return t;
}

GF2Matrix GF2Matrix::operator*(const GF2Matrix &other) const {
    if (ncols_ != other.nrows()) {
        throw std::invalid_argument("GF2Matrix product: inner dimensions differ");
    }
    GF2Matrix out(rows_.size(), other.ncols());
    for (size_t r = 0; r < rows_.size(); r++) {
        for (size_t k : rows_[r].ones()) {
            out.rows_[r] ^= other.row(k);
        }
    }
    return out;
}

GF2Matrix GF2Matrix::operator^(const GF2Matrix &other) const {
    if (rows_.size() != other.nrows() || ncols_ != other.ncols()) {
        throw std::invalid_argument("GF2Matrix sum: shape mismatch");
    }
    GF2Matrix out = *this;
    for (size_t r = 0; r < rows_.size(); r++) {
        out.rows_[r] ^= other.row(r);
    }
    return out;
}

bool GF2Matrix::is_zero() const {
    for (const auto &r : rows_) {
        if (r.any()) {
            return false;
        }
    }
    return true;
}

BitVec GF2Matrix::column(size_t c) const {
    BitVec out(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        if (rows_[r][c]) {
            out.set(r);
        }
    }
    return out;
}

std::string GF2Matrix::dump() const {
    std::ostringstream out;
    for (const auto &r : rows_) {
        out << r.str() << '\n';
    }
    return out.str();
}

GF2Matrix circulant(const PolyF2 &p, size_t n) {
    GF2Matrix m(n, n);
    for (size_t e : reduce_mod(p, n).exponents()) {
        for (size_t i = 0; i < n; i++) {
            m.flip(i, (i + e) % n);
        }
    }
    return m;
}

GF2Matrix hconcat(const GF2Matrix &left, const GF2Matrix &right) {
    if (left.nrows() != right.nrows()) {
        throw std::invalid_argument("hconcat: row counts differ");
    }
    GF2Matrix out(left.nrows(), left.ncols() + right.ncols());
    for (size_t r = 0; r < left.nrows(); r++) {
        for (size_t c : left.row(r).ones()) {
            out.set(r, c);
        }
        for (size_t c : right.row(r).ones()) {
            out.set(r, left.ncols() + c);
        }
    }
    return out;
}

size_t rank(const GF2Matrix &m) {
    std::vector<BitVec> rows = m.rows();
    return reduce_rows(rows, m.ncols()).size();
}

GF2Matrix left_nullspace_basis(const GF2Matrix &m) {
    std::vector<BitVec> rows = widen(m, m.nrows());
    for (size_t i = 0; i < rows.size(); i++) {
        rows[i].set(m.ncols() + i);
    }
    size_t r = reduce_rows(rows, m.ncols()).size();
    GF2Matrix out(0, m.nrows());
    for (size_t i = r; i < rows.size(); i++) {
        BitVec rel(m.nrows());
        for (size_t c = rows[i].find_next(m.ncols()); c < rows[i].size(); c = rows[i].find_next(c + 1)) {
            rel.set(c - m.ncols());
        }
        out.append_row(std::move(rel));
    }
    return out;
}

std::optional<BitVec> solve(const GF2Matrix &m, const BitVec &s) {
    if (s.size() != m.nrows()) {
        throw std::invalid_argument("solve: target length differs from row count");
    }
    std::vector<BitVec> rows = widen(m, 1);
    for (size_t i = 0; i < rows.size(); i++) {
        rows[i].set(m.ncols(), s[i]);
    }
    std::vector<size_t> pivots = reduce_rows(rows, m.ncols());
    for (size_t i = pivots.size(); i < rows.size(); i++) {
        if (rows[i][m.ncols()]) {
            return std::nullopt;
        }
    }
    BitVec x(m.ncols());
    for (size_t r = 0; r < pivots.size(); r++) {
        x.set(pivots[r], rows[r][m.ncols()]);
    }
    return x;
}

bool in_rowspace(const BitVec &v, const GF2Matrix &m) {
    return RowSpaceReducer(m).contains(v);
}

std::vector<size_t> row_reduce(std::vector<BitVec> &rows, size_t active_cols) {
    return reduce_rows(rows, active_cols);
}

BitVec matvec(const GF2Matrix &m, const BitVec &x) {
    if (x.size() != m.ncols()) {
        throw std::invalid_argument("matvec: vector length differs from column count");
    }
    BitVec out(m.nrows());
    for (size_t r = 0; r < m.nrows(); r++) {
        if (m.row(r).dot(x)) {
            out.set(r);
        }
    }
    return out;
}

RowSpaceReducer::RowSpaceReducer(const GF2Matrix &m) : ncols_(m.ncols()), basis_(m.rows()) {
    pivots_ = reduce_rows(basis_, ncols_);
    basis_.resize(pivots_.size());
}

BitVec RowSpaceReducer::reduce(BitVec v) const {
    if (v.size() != ncols_) {
        throw std::invalid_argument("RowSpaceReducer: vector length mismatch");
    }
    for (size_t r = 0; r < basis_.size(); r++) {
        if (v[pivots_[r]]) {
            v ^= basis_[r];
        }
    }
    return v;
}

}  // namespace bbshot
