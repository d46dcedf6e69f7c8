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

#include "bbshot/galois.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bbshot {

namespace {

constexpr unsigned kMaxExtensionDegree = 20;

std::vector<uint32_t> prime_factors(uint32_t v) {
    std::vector<uint32_t> out;
    for (uint32_t f = 2; static_cast<uint64_t>(f) * f <= v; f++) {
        if (v % f == 0) {
            out.push_back(f);
            while (v % f == 0) {
                v /= f;
            }
        }
    }
    if (v > 1) {
        out.push_back(v);
    }
    return out;
}

// Multiplication modulo the field polynomial without tables; used only while
// searching for the generator.
uint32_t slow_mul(uint32_t a, uint32_t b, uint32_t modulus_bits, unsigned m) {
    uint64_t acc = 0;
    for (unsigned k = 0; k < m; k++) {
        if ((b >> k) & 1) {
            acc ^= static_cast<uint64_t>(a) << k;
        }
    }
    for (int k = 2 * static_cast<int>(m) - 2; k >= static_cast<int>(m); k--) {
        if ((acc >> k) & 1) {
            acc ^= static_cast<uint64_t>(modulus_bits) << (k - static_cast<int>(m));
        }
    }
    return static_cast<uint32_t>(acc);
}

uint32_t slow_pow(uint32_t a, uint64_t e, uint32_t modulus_bits, unsigned m) {
    uint32_t result = 1;
    while (e) {
        if (e & 1) {
            result = slow_mul(result, a, modulus_bits, m);
        }
        a = slow_mul(a, a, modulus_bits, m);
        e >>= 1;
    }
    return result;
}

}  // namespace

unsigned multiplicative_order_of_two(uint32_t n) {
    if (n == 0 || n % 2 == 0) {
        throw std::invalid_argument("multiplicative order of 2 requires an odd modulus");
    }
    if (n == 1) {
        return 1;
    }
    unsigned m = 1;
    uint64_t v = 2 % n;
    while (v != 1) {
        v = (v * 2) % n;
        m++;
    }
    return m;
}

bool is_irreducible(const PolyF2 &p) {
    auto deg = p.degree();
    if (!deg || *deg == 0) {
        return false;
    }
    // Any factorization has a factor of degree <= deg/2.
    for (size_t d = 1; 2 * d <= *deg; d++) {
        for (uint64_t low = 0; low < (uint64_t{1} << d); low++) {
            PolyF2 cand = PolyF2::from_bits(low);
            cand.flip(d);
            if (divides(cand, p)) {
                return false;
            }
        }
    }
    return true;
}

FieldContext build_field_context(uint32_t n) {
    if (n == 0) {
        throw std::invalid_argument("build_field_context: N must be positive");
    }
    if (n % 2 == 0) {
        throw std::invalid_argument(
            "build_field_context: N = " + std::to_string(n) +
            " is even; z^N - 1 is not squarefree over GF(2) and only odd N is supported");
    }
    FieldContext ctx;
    ctx.n = n;
    ctx.m = multiplicative_order_of_two(n);
    if (ctx.m > kMaxExtensionDegree) {
        throw std::invalid_argument(
            "build_field_context: extension degree " + std::to_string(ctx.m) + " exceeds the supported maximum of " +
            std::to_string(kMaxExtensionDegree));
    }
    unsigned m = ctx.m;

    uint32_t modulus_bits = 0;
    for (uint32_t cand = 1u << m; cand < (2u << m); cand++) {
        if (is_irreducible(PolyF2::from_bits(cand))) {
            modulus_bits = cand;
            break;
        }
    }
    ctx.modulus = PolyF2::from_bits(modulus_bits);
    ctx.group_order = (1u << m) - 1;

    std::vector<uint32_t> order_factors = prime_factors(ctx.group_order);
    for (uint32_t cand = 1; cand <= ctx.group_order; cand++) {
        bool ok = true;
        for (uint32_t f : order_factors) {
            if (slow_pow(cand, ctx.group_order / f, modulus_bits, m) == 1) {
                ok = false;
                break;
            }
        }
        if (ok && slow_pow(cand, ctx.group_order, modulus_bits, m) == 1) {
            ctx.generator = cand;
            break;
        }
    }
    if (ctx.generator == 0) {
        throw std::logic_error("build_field_context: no multiplicative generator found");
    }

    ctx.exp_table.assign(2 * static_cast<size_t>(ctx.group_order), 0);
    ctx.log_table.assign(static_cast<size_t>(ctx.group_order) + 1, 0);
    uint32_t x = 1;
    for (uint32_t k = 0; k < ctx.group_order; k++) {
        ctx.exp_table[k] = x;
        ctx.exp_table[k + ctx.group_order] = x;
        ctx.log_table[x] = k;
        x = slow_mul(x, ctx.generator, modulus_bits, m);
    }

    ctx.omega = ctx.exp_table[(ctx.group_order / n) % ctx.group_order];
    if (ctx.omega_pow(n) != 1) {
        throw std::logic_error("build_field_context: omega^N != 1");
    }
    for (uint32_t f : prime_factors(n)) {
        if (ctx.omega_pow(n / f) == 1) {
            throw std::logic_error("build_field_context: omega has order smaller than N");
        }
    }
    return ctx;
}

uint32_t FieldContext::omega_pow(long long e) const {
    long long nn = n;
    long long r = ((e % nn) + nn) % nn;
    if (omega == 1) {
        return 1;
    }
    uint64_t lg = static_cast<uint64_t>(log_table[omega]) * static_cast<uint64_t>(r);
    return exp_table[lg % group_order];
}

uint32_t FieldContext::eval(const PolyF2 &p, uint32_t x) const {
    auto deg = p.degree();
    if (!deg) {
        return 0;
    }
    uint32_t acc = 0;
    for (size_t k = *deg + 1; k-- > 0;) {
        acc = mul(acc, x) ^ (p.coeff(k) ? 1u : 0u);
    }
    return acc;
}

std::vector<uint32_t> root_exponents(const PolyF2 &g, const FieldContext &ctx) {
    if (g.is_zero() || !divides(g, cyclic_modulus(ctx.n))) {
        throw std::invalid_argument("root_exponents: " + g.str() + " does not divide z^" + std::to_string(ctx.n) + "-1");
    }
    std::vector<uint32_t> roots;
    for (uint32_t e = 0; e < ctx.n; e++) {
        if (ctx.eval(g, ctx.omega_pow(e)) == 0) {
            roots.push_back(e);
        }
    }
    return roots;
}

CosetPartition cyclotomic_cosets(uint32_t n) {
    if (n == 0 || n % 2 == 0) {
        throw std::invalid_argument("cyclotomic_cosets: N must be odd");
    }
    CosetPartition out;
    out.n = n;
    std::vector<bool> seen(n, false);
    for (uint32_t start = 0; start < n; start++) {
        if (seen[start]) {
            continue;
        }
        std::vector<uint32_t> coset;
        uint32_t e = start;
        while (!seen[e]) {
            seen[e] = true;
            coset.push_back(e);
            e = static_cast<uint32_t>((2ull * e) % n);
        }
        std::sort(coset.begin(), coset.end());
        out.cosets.push_back(std::move(coset));
    }
    return out;
}

PolyF2 minimal_polynomial(const std::vector<uint32_t> &coset, const FieldContext &ctx) {
    // Coefficients in GF(2^m), little-endian.
    std::vector<uint32_t> coeffs{1};
    for (uint32_t e : coset) {
        uint32_t root = ctx.omega_pow(e);
        std::vector<uint32_t> next(coeffs.size() + 1, 0);
        for (size_t k = 0; k < coeffs.size(); k++) {
            next[k + 1] ^= coeffs[k];
            next[k] ^= ctx.mul(coeffs[k], root);
        }
        coeffs = std::move(next);
    }
    PolyF2 out;
    for (size_t k = 0; k < coeffs.size(); k++) {
        if (coeffs[k] > 1) {
            throw std::logic_error("minimal_polynomial: coset is not closed under doubling");
        }
        if (coeffs[k]) {
            out.flip(k);
        }
    }
    return out;
}

std::vector<PolyF2> cyclic_modulus_factors(const FieldContext &ctx) {
    std::vector<PolyF2> out;
    for (const auto &coset : cyclotomic_cosets(ctx.n).cosets) {
        out.push_back(minimal_polynomial(coset, ctx));
    }
    return out;
}

}  // namespace bbshot
