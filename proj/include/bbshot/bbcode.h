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

#ifndef BBSHOT_BBCODE_H
#define BBSHOT_BBCODE_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bbshot/gf2_matrix.h"
#include "bbshot/poly.h"

namespace bbshot {

/// Check type. Sector::X refers to the X-type checks H_X, which detect Z
/// errors; its syndrome code is C_S^X and its relation matrix is R_X.
enum class Sector { X, Z };

const char *sector_name(Sector s);

/// Which polynomial's cyclic shifts generate the relation matrix.
enum class RelationConvention { Reciprocal, Direct };

const char *convention_name(RelationConvention c);

struct BBParams {
    std::string name;
    uint32_t n_half = 0;  // N; the code has n = 2N qubits
    std::vector<long long> a_exponents;
    std::vector<long long> b_exponents;
    std::optional<uint32_t> ell;
    std::optional<uint32_t> mel;
};

/// Relation (syndrome-check) matrix of one sector: deg g rows, each a cyclic
/// shift of h or of its reciprocal, annihilating the sector's check matrix.
struct SyndromeCheck {
    GF2Matrix matrix;
    RelationConvention convention = RelationConvention::Reciprocal;
    /// All N cyclic shifts of the same polynomial. Same row space as
    /// `matrix`; the redundant rows give BP enough checks per bit to
    /// correct every single flip, so decoders run on this one.
    GF2Matrix circulant;
};

/// The syndrome code of one sector as a cyclic code: generator polynomial
/// (g or its reciprocal) and a (N - deg g) x N generator matrix of shifts.
struct SyndromeCode {
    PolyF2 generator;
    RelationConvention convention = RelationConvention::Direct;
    GF2Matrix generator_matrix;
};

/// A coprime bivariate bicycle code in its univariate picture
/// F2[z]/(z^N - 1), with H_X = [A B] and H_Z = [B^T A^T].
struct BBCode {
    std::string name;
    uint32_t n_half = 0;
    std::optional<uint32_t> ell;
    std::optional<uint32_t> mel;
    PolyF2 a;
    PolyF2 b;
    GF2Matrix hx;
    GF2Matrix hz;
    PolyF2 g;
    PolyF2 h;
    uint32_t k = 0;
    uint32_t r_x = 0;
    uint32_t r_z = 0;
    SyndromeCheck rx;
    SyndromeCheck rz;
    bool degenerate = false;
    std::vector<std::string> warnings;

    uint32_t n() const {
        return 2 * n_half;
    }
    uint32_t deg_g() const {
        return static_cast<uint32_t>(g.degree().value_or(0));
    }
    const GF2Matrix &checks(Sector s) const {
        return s == Sector::X ? hx : hz;
    }
    const GF2Matrix &stabilizers_of_other_type(Sector s) const {
        return s == Sector::X ? hz : hx;
    }
    const SyndromeCheck &relations(Sector s) const {
        return s == Sector::X ? rx : rz;
    }
};

/// Constructs the code and verifies every structural identity; a violated
/// identity throws std::logic_error. Even N or non-coprime (ell, mel) throw
/// std::invalid_argument.
BBCode build_bb(const BBParams &params);

/// Shifts of reciprocal(h), falling back to shifts of h when the reciprocal
/// rows do not annihilate the check matrix. Throws std::logic_error if
/// neither convention works.
SyndromeCheck syndrome_check_matrix(const BBCode &code, Sector sector);

/// Generator of im(checks(sector)) as a cyclic code.
SyndromeCode syndrome_code(const BBCode &code, Sector sector);

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

/// Evaluates the structural identities without throwing.
std::vector<CheckResult> verify_structure(const BBCode &code);

struct Fraction {
    long long num = 0;
    long long den = 1;
    static Fraction make(long long num, long long den);
    bool operator==(const Fraction &) const = default;
    std::string str() const;
};

struct CodeReport {
    std::string name;
    uint32_t n = 0;
    uint32_t k = 0;
    uint32_t n_half = 0;
    uint32_t deg_g = 0;
    uint32_t r_x = 0;
    uint32_t r_z = 0;
    Fraction rate;
    Fraction density;
    bool rate_equals_density = false;
    bool degenerate = false;
    std::vector<size_t> g_exponents;
    std::vector<size_t> h_exponents;
    std::vector<std::string> warnings;

    std::string text() const;
    static std::string csv_header();
    std::string csv_row() const;
};

CodeReport code_report(const BBCode &code);

/// Lowest-weight nontrivial logical operator detected by `sector`'s checks:
/// r with checks(sector) * r = 0 and r outside the row space of the other
/// stabilizer type, searched exhaustively over weights 1..max_weight.
std::optional<BitVec> find_low_weight_logical(const BBCode &code, Sector sector, unsigned max_weight);

}  // namespace bbshot

#endif
