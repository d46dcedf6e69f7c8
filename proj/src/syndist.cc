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

#include "bbshot/syndist.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace bbshot {

BchRun bch_designed_distance(const PolyF2 &g, const FieldContext &ctx) {
    std::vector<uint32_t> roots = root_exponents(g, ctx);
    uint32_t n = ctx.n;
    if (roots.empty()) {
        return BchRun{0, 1};
    }
    if (roots.size() == n) {
        return BchRun{0, n + 1};
    }
    std::vector<bool> is_root(n, false);
    for (uint32_t e : roots) {
        is_root[e] = true;
    }
    BchRun best{0, 1};
    for (uint32_t e : roots) {
        if (is_root[(e + n - 1) % n]) {
            continue;  // not the start of a run
        }
        uint32_t len = 0;
        while (is_root[(e + len) % n]) {
            len++;
        }
        if (len + 1 > best.delta) {
            best = BchRun{e, len + 1};
        }
    }
    return best;
}

namespace {

uint32_t enumerate_range(const std::vector<BitVec> &rows, uint64_t lo, uint64_t hi) {
    size_t ncols = rows.empty() ? 0 : rows[0].size();
    BitVec c(ncols);
    uint64_t gray = lo ^ (lo >> 1);
    for (size_t k = 0; k < rows.size(); k++) {
        if ((gray >> k) & 1) {
            c ^= rows[k];
        }
    }
    uint32_t best = static_cast<uint32_t>(ncols) + 1;
    if (lo != 0) {
        best = std::min<uint32_t>(best, static_cast<uint32_t>(c.weight()));
    }
    for (uint64_t i = lo + 1; i < hi; i++) {
        c ^= rows[std::countr_zero(i)];
        uint32_t w = static_cast<uint32_t>(c.weight());
        if (w < best) {
            best = w;
        }
    }
    return best;
}

}  // namespace

std::optional<uint32_t> min_distance_exact(const GF2Matrix &gen, uint64_t budget, unsigned workers) {
    size_t dim = gen.nrows();
    if (dim == 0) {
        throw std::invalid_argument("min_distance_exact: code has no nonzero codewords");
    }
    if (dim >= 63 || (uint64_t{1} << dim) > budget) {
        return std::nullopt;
    }
    uint64_t total = uint64_t{1} << dim;
    workers = std::max(1u, workers);
    uint64_t chunks = std::min<uint64_t>(workers, total);
    std::vector<uint32_t> results(chunks, 0);
    auto run = [&](uint64_t w) {
        uint64_t lo = total * w / chunks;
        uint64_t hi = total * (w + 1) / chunks;
        results[w] = enumerate_range(gen.rows(), lo, hi);
    };
    if (chunks == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (uint64_t w = 0; w < chunks; w++) {
            threads.emplace_back(run, w);
        }
        for (auto &t : threads) {
            t.join();
        }
    }
    return *std::min_element(results.begin(), results.end());
}

uint32_t min_distance_upper(
    const GF2Matrix &gen, const PolyF2 &generator_poly, uint32_t n, uint32_t trials, uint64_t seed) {
    size_t ncols = gen.ncols();
    uint32_t best = static_cast<uint32_t>(ncols);
    auto consider = [&](size_t w) {
        if (w > 0 && w < best) {
            best = static_cast<uint32_t>(w);
        }
    };
    for (const auto &r : gen.rows()) {
        consider(r.weight());
    }
    if (!generator_poly.is_zero() && n > 0) {
        // Cyclic shifts preserve weight, so g * (z^i + z^j) depends only on j - i.
        PolyF2 g = reduce_mod(generator_poly, n);
        consider(g.weight());
        for (uint32_t delta = 1; delta < n; delta++) {
            PolyF2 lambda = PolyF2::monomial(0);
            lambda.flip(delta);
            consider(poly_mul_mod(g, lambda, n).weight());
        }
    }

    std::mt19937_64 rng(seed);
    std::vector<size_t> perm(ncols);
    for (uint32_t t = 0; t < trials && gen.nrows() > 0; t++) {
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        // Systematic form on a random information set; weights are invariant
        // under the column permutation, so we reduce in permuted coordinates.
        std::vector<BitVec> rows;
        rows.reserve(gen.nrows());
        for (const auto &r : gen.rows()) {
            BitVec p(ncols);
            for (size_t c = 0; c < ncols; c++) {
                if (r[perm[c]]) {
                    p.set(c);
                }
            }
            rows.push_back(std::move(p));
        }
        size_t lead = 0;
        for (size_t c = 0; c < ncols && lead < rows.size(); c++) {
            size_t found = rows.size();
            for (size_t i = lead; i < rows.size(); i++) {
                if (rows[i][c]) {
                    found = i;
                    break;
                }
            }
            if (found == rows.size()) {
                continue;
            }
            std::swap(rows[lead], rows[found]);
            for (size_t i = 0; i < rows.size(); i++) {
                if (i != lead && rows[i][c]) {
                    rows[i] ^= rows[lead];
                }
            }
            lead++;
        }
        for (size_t i = 0; i < lead; i++) {
            consider(rows[i].weight());
            for (size_t j = i + 1; j < lead; j++) {
                consider((rows[i] ^ rows[j]).weight());
            }
        }
    }
    return best;
}

SingletonCheck singleton_check(uint32_t distance, uint32_t deg_g) {
    int limit = static_cast<int>(deg_g) + 1;
    int d = static_cast<int>(distance);
    return SingletonCheck{d <= limit, limit - d};
}

double p_fail_theory(uint32_t n, uint32_t t, double q) {
    if (q < 0 || q > 1) {
        throw std::invalid_argument("p_fail_theory: q must lie in [0, 1]");
    }
    if (t >= n || q == 0) {
        return 0.0;
    }
    if (q == 1) {
        return 1.0;
    }
    double log_q = std::log(q);
    double log_1mq = std::log1p(-q);
    double lg_n = std::lgamma(n + 1.0);
    double total = 0;
    for (uint32_t i = t + 1; i <= n; i++) {
        double log_term = lg_n - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0) + i * log_q + (n - i) * log_1mq;
        total += std::exp(log_term);
    }
    return std::min(1.0, total);
}

SyndromeReport analyze_syndrome_code(const BBCode &code, Sector sector, const AnalyzeOptions &opts) {
    SyndromeReport r;
    r.name = code.name;
    r.sector = sector;
    r.n = code.n_half;
    r.deg_g = code.deg_g();
    r.dim = r.n - r.deg_g;
    r.singleton_limit = r.deg_g + 1;

    FieldContext ctx = build_field_context(code.n_half);
    BchRun bch = bch_designed_distance(code.g, ctx);
    r.d_lower = bch.delta;
    r.bch_start = bch.start;

    if (r.dim > 0) {
        SyndromeCode sc = syndrome_code(code, sector);
        r.d_exact = min_distance_exact(sc.generator_matrix, opts.budget, opts.workers);
        r.budget_exceeded = !r.d_exact.has_value();
        if (r.d_exact) {
            r.d_exact_source = "exact";
        }
        r.d_upper = min_distance_upper(sc.generator_matrix, sc.generator, r.n, opts.upper_trials, opts.seed);
        if (!r.d_exact && r.d_lower == r.d_upper) {
            r.d_exact = r.d_lower;
            r.d_exact_source = "bracket";
        }
    }
    r.t_s = correction_radius(r.best_verified());

    const GF2Matrix &rel = code.relations(sector).matrix;
    if (rel.nrows() > 0) {
        r.relation_distance = min_distance_exact(rel, opts.budget, opts.workers);
    }
    return r;
}

std::string SyndromeReport::text() const {
    std::ostringstream out;
    out << "name=" << name << "\n";
    out << "sector=" << sector_name(sector) << "\n";
    out << "N=" << n << "\n";
    out << "dim=" << dim << "\n";
    out << "deg_g=" << deg_g << "\n";
    out << "d_lower=" << d_lower << "  # bch, run start b=" << bch_start << "\n";
    if (d_exact) {
        out << "d_exact=" << *d_exact << "  # " << d_exact_source << "\n";
    } else {
        out << "d_exact=  # " << (budget_exceeded ? "budget exceeded" : "empty syndrome code") << "\n";
    }
    out << "d_upper=" << d_upper << "  # search\n";
    out << "singleton_limit=" << singleton_limit << "\n";
    out << "t_S=" << t_s << "\n";
    if (relation_distance) {
        out << "relation_code_distance=" << *relation_distance << "  # cyclic code generated by h\n";
    }
    return out.str();
}

std::string SyndromeReport::csv_header() {
    return "name,N,dim,d_lower,d_exact,d_upper,singleton_limit,t_S";
}

std::string SyndromeReport::csv_row() const {
    std::ostringstream out;
    out << name << "," << n << "," << dim << "," << d_lower << ",";
    if (d_exact) {
        out << *d_exact;
    }
    out << "," << d_upper << "," << singleton_limit << "," << t_s;
    return out.str();
}

}  // namespace bbshot
