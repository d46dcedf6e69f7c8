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

#include "bbshot/bbcode.h"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bbshot {

namespace {

std::string join_exponents(const std::vector<size_t> &exps, char sep) {
    std::string out;
    for (size_t k = 0; k < exps.size(); k++) {
        if (k) {
            out += sep;
        }
        out += std::to_string(exps[k]);
    }
    return out;
}

// Rows z^i * p mod (z^n - 1) for i in [0, count).
GF2Matrix cyclic_shift_rows(const PolyF2 &p, size_t n, size_t count) {
    std::vector<size_t> exps = reduce_mod(p, n).exponents();
    GF2Matrix m(count, n);
    for (size_t i = 0; i < count; i++) {
        for (size_t e : exps) {
            m.flip(i, (i + e) % n);
        }
    }
    return m;
}

}  // namespace

const char *sector_name(Sector s) {
    return s == Sector::X ? "X" : "Z";
}

const char *convention_name(RelationConvention c) {
    return c == RelationConvention::Reciprocal ? "reciprocal" : "direct";
}

BBCode build_bb(const BBParams &params) {
    uint32_t n = params.n_half;
    if (n == 0) {
        throw std::invalid_argument("build_bb: N must be positive");
    }
    if (n % 2 == 0) {
        throw std::invalid_argument(
            "build_bb: N = " + std::to_string(n) + " is even; only odd N (squarefree z^N - 1) is supported");
    }
    if (params.ell.has_value() != params.mel.has_value()) {
        throw std::invalid_argument("build_bb: ell and mel must be given together");
    }
    if (params.ell) {
        uint64_t ell = *params.ell;
        uint64_t mel = *params.mel;
        if (ell * mel != n) {
            throw std::invalid_argument(
                "build_bb: ell * mel = " + std::to_string(ell * mel) + " differs from N = " + std::to_string(n));
        }
        if (std::gcd(ell, mel) != 1) {
            throw std::invalid_argument("build_bb: ell and mel are not coprime");
        }
    }

    BBCode code;
    code.name = params.name;
    code.n_half = n;
    code.ell = params.ell;
    code.mel = params.mel;
    code.a = poly_from_exponents(n, params.a_exponents);
    code.b = poly_from_exponents(n, params.b_exponents);

    GF2Matrix A = circulant(code.a, n);
    GF2Matrix B = circulant(code.b, n);
    code.hx = hconcat(A, B);
    code.hz = hconcat(B.transpose(), A.transpose());

    PolyF2 modulus = cyclic_modulus(n);
    code.g = poly_gcd(poly_gcd(modulus, code.a), code.b);
    code.h = poly_divmod(modulus, code.g).quotient;
    code.k = 2 * code.deg_g();
    code.r_x = n - static_cast<uint32_t>(rank(code.hx));
    code.r_z = n - static_cast<uint32_t>(rank(code.hz));
    code.rx = syndrome_check_matrix(code, Sector::X);
    code.rz = syndrome_check_matrix(code, Sector::Z);

    if (code.deg_g() == 0) {
        code.degenerate = true;
        code.warnings.push_back("degenerate code: g = 1, so k = 0 and there is no stabilizer redundancy");
    }
    if (code.a.weight() != 3 || code.b.weight() != 3) {
        code.warnings.push_back(
            "generator weights are (" + std::to_string(code.a.weight()) + ", " + std::to_string(code.b.weight()) +
            "), not trinomials; checks are not weight 6");
    }

    for (const auto &check : verify_structure(code)) {
        if (!check.ok) {
            throw std::logic_error("build_bb: invariant '" + check.name + "' violated: " + check.detail);
        }
    }
    return code;
}

SyndromeCheck syndrome_check_matrix(const BBCode &code, Sector sector) {
    size_t n = code.n_half;
    size_t d = code.deg_g();
    const GF2Matrix &checks = code.checks(sector);
    for (auto convention : {RelationConvention::Reciprocal, RelationConvention::Direct}) {
        PolyF2 base = convention == RelationConvention::Reciprocal ? reciprocal(code.h, n) : code.h;
        GF2Matrix rows = cyclic_shift_rows(base, n, d);
        if ((rows * checks).is_zero() && rank(rows) == d) {
            return SyndromeCheck{std::move(rows), convention, cyclic_shift_rows(base, n, n)};
        }
    }
    throw std::logic_error(
        std::string("syndrome_check_matrix: neither h nor its reciprocal annihilates H_") + sector_name(sector));
}

SyndromeCode syndrome_code(const BBCode &code, Sector sector) {
    size_t n = code.n_half;
    size_t dim = n - code.deg_g();
    RowSpaceReducer image(code.checks(sector).transpose());
    for (auto convention : {RelationConvention::Direct, RelationConvention::Reciprocal}) {
        PolyF2 gen = convention == RelationConvention::Direct ? code.g : reciprocal(code.g, n);
        GF2Matrix rows = cyclic_shift_rows(gen, n, dim);
        bool inside = true;
        for (const auto &r : rows.rows()) {
            if (!image.contains(r)) {
                inside = false;
                break;
            }
        }
        if (inside && image.rank() == dim && rank(rows) == dim) {
            return SyndromeCode{std::move(gen), convention, std::move(rows)};
        }
    }
    throw std::logic_error(
        std::string("syndrome_code: image of H_") + sector_name(sector) + " is not the cyclic code generated by g");
}

std::vector<CheckResult> verify_structure(const BBCode &code) {
    std::vector<CheckResult> out;
    auto add = [&](std::string name, bool ok, std::string detail) {
        out.push_back(CheckResult{std::move(name), ok, std::move(detail)});
    };
    size_t n = code.n_half;
    size_t d = code.deg_g();
    size_t rank_x = rank(code.hx);
    size_t rank_z = rank(code.hz);

    add("css", (code.hx * code.hz.transpose()).is_zero(), "H_X * H_Z^T = 0");

    size_t k_ranks = 2 * n - rank_x - rank_z;
    add("dimension",
        k_ranks == 2 * d && code.k == 2 * d,
        "k = 2N - rank(H_X) - rank(H_Z) = " + std::to_string(k_ranks) + ", 2 deg g = " + std::to_string(2 * d));

    add("rank",
        rank_x == n - d && rank_z == n - d,
        "rank(H_X) = " + std::to_string(rank_x) + ", rank(H_Z) = " + std::to_string(rank_z) +
            ", N - deg g = " + std::to_string(n - d));

    add("redundancy",
        n - rank_x == d && n - rank_z == d && code.r_x == d && code.r_z == d && 2 * code.r_x == code.k,
        "r_X = " + std::to_string(n - rank_x) + ", r_Z = " + std::to_string(n - rank_z) +
            ", deg g = " + std::to_string(d));

    for (Sector s : {Sector::X, Sector::Z}) {
        const GF2Matrix &r = code.relations(s).matrix;
        const GF2Matrix &full = code.relations(s).circulant;
        bool ok = r.nrows() == d && r.ncols() == n && (r * code.checks(s)).is_zero() && rank(r) == d &&
                  full.nrows() == n && (full * code.checks(s)).is_zero() && rank(full) == d;
        add(std::string("relations_") + sector_name(s), ok,
            std::string("R_") + sector_name(s) + " * H_" + sector_name(s) + " = 0 with rank deg g (" +
                convention_name(code.relations(s).convention) + " h)");
    }

    add("rate_density",
        static_cast<uint64_t>(code.r_x) * code.n() == static_cast<uint64_t>(code.k) * n,
        "r_X / N = " + Fraction::make(code.r_x, n).str() + ", k / n = " + Fraction::make(code.k, code.n()).str());

    for (Sector s : {Sector::X, Sector::Z}) {
        std::string name = std::string("syndrome_code_") + sector_name(s);
        try {
            SyndromeCode sc = syndrome_code(code, s);
            add(name, true,
                std::string("im(H_") + sector_name(s) + ") = <" + sc.generator.str() + "> (" +
                    convention_name(sc.convention) + " g)");
        } catch (const std::logic_error &e) {
            add(name, false, e.what());
        }
    }
    return out;
}

Fraction Fraction::make(long long num, long long den) {
    if (den == 0) {
        throw std::invalid_argument("Fraction: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num, den);
    if (g == 0) {
        return Fraction{0, 1};
    }
    return Fraction{num / g, den / g};
}

std::string Fraction::str() const {
    if (num == 0) {
        return "0";
    }
    if (den == 1) {
        return std::to_string(num);
    }
    return std::to_string(num) + "/" + std::to_string(den);
}

CodeReport code_report(const BBCode &code) {
    CodeReport r;
    r.name = code.name;
    r.n = code.n();
    r.k = code.k;
    r.n_half = code.n_half;
    r.deg_g = code.deg_g();
    r.r_x = code.r_x;
    r.r_z = code.r_z;
    r.rate = Fraction::make(code.k, code.n());
    r.density = Fraction::make(code.r_x, code.n_half);
    r.rate_equals_density = r.rate == r.density;
    r.degenerate = code.degenerate;
    r.g_exponents = code.g.exponents();
    r.h_exponents = code.h.exponents();
    r.warnings = code.warnings;
    return r;
}

std::string CodeReport::text() const {
    std::ostringstream out;
    out << "[[" << n << "," << k << ",?]], deg g=" << deg_g << ", r=" << r_x;
    if (rate_equals_density) {
        out << ", rate=density=" << rate.str();
    } else {
        out << ", rate=" << rate.str() << " != density=" << density.str();
    }
    out << "\n";
    out << "name=" << name << "\n";
    out << "N=" << n_half << "\n";
    out << "n=" << n << "\n";
    out << "k=" << k << "\n";
    out << "deg_g=" << deg_g << "\n";
    out << "r_X=" << r_x << "\n";
    out << "r_Z=" << r_z << "\n";
    out << "rate=" << rate.str() << "\n";
    out << "density=" << density.str() << "\n";
    out << "rate_equals_density=" << (rate_equals_density ? "true" : "false") << "\n";
    out << "g=" << join_exponents(g_exponents, ',') << "\n";
    out << "h=" << join_exponents(h_exponents, ',') << "\n";
    for (const auto &w : warnings) {
        out << "warning: " << w << "\n";
    }
    return out.str();
}

std::string CodeReport::csv_header() {
    return "name,N,n,k,deg_g,r_X,r_Z,rate,density,rate_equals_density,g,h";
}

std::string CodeReport::csv_row() const {
    std::ostringstream out;
    out << name << "," << n_half << "," << n << "," << k << "," << deg_g << "," << r_x << "," << r_z << ","
        << rate.str() << "," << density.str() << "," << (rate_equals_density ? "true" : "false") << ","
        << join_exponents(g_exponents, ';') << "," << join_exponents(h_exponents, ';');
    return out.str();
}

std::optional<BitVec> find_low_weight_logical(const BBCode &code, Sector sector, unsigned max_weight) {
    const GF2Matrix &checks = code.checks(sector);
    size_t n = checks.ncols();
    std::vector<BitVec> cols;
    cols.reserve(n);
    for (size_t c = 0; c < n; c++) {
        cols.push_back(checks.column(c));
    }
    RowSpaceReducer stabilizers(code.stabilizers_of_other_type(sector));

    for (unsigned w = 1; w <= max_weight && w <= n; w++) {
        std::vector<size_t> idx(w);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            BitVec syn(checks.nrows());
            for (size_t c : idx) {
                syn ^= cols[c];
            }
            if (syn.none()) {
                BitVec r = BitVec::from_indices(n, idx);
                if (!stabilizers.contains(r)) {
                    return r;
                }
            }
            // Next combination in lexicographic order.
            size_t pos = w;
            while (pos > 0 && idx[pos - 1] == n - w + pos - 1) {
                pos--;
            }
            if (pos == 0) {
                break;
            }
            idx[pos - 1]++;
            for (size_t j = pos; j < w; j++) {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    return std::nullopt;
}

}  // namespace bbshot
