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

#ifndef BBSHOT_GALOIS_H
#define BBSHOT_GALOIS_H

#include <cstdint>
#include <vector>

#include "bbshot/poly.h"

namespace bbshot {

/// GF(2^m) with a primitive n-th root of unity, for odd n.
///
/// Field elements are m-bit integers in the polynomial basis of `modulus`.
/// Multiplication goes through exp/log tables built from the first
/// multiplicative generator found in increasing integer order.
struct FieldContext {
    uint32_t n = 0;
    unsigned m = 0;
    PolyF2 modulus;
    uint32_t group_order = 0;  // 2^m - 1
    uint32_t generator = 0;
    uint32_t omega = 0;
    std::vector<uint32_t> exp_table;  // length 2 * group_order
    std::vector<uint32_t> log_table;  // log_table[0] unused

    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) {
            return 0;
        }
        return exp_table[log_table[a] + log_table[b]];
    }
    /// omega^e for any integer exponent (reduced mod n).
    uint32_t omega_pow(long long e) const;
    /// Evaluates p at a field element by Horner's rule.
    uint32_t eval(const PolyF2 &p, uint32_t x) const;
};

/// Smallest m >= 1 with 2^m = 1 (mod n); n must be odd.
unsigned multiplicative_order_of_two(uint32_t n);

/// Trial division by every polynomial of degree 1..deg/2.
bool is_irreducible(const PolyF2 &p);

/// Builds the field context for odd n. Even n is rejected because
/// z^n - 1 is then not squarefree.
FieldContext build_field_context(uint32_t n);

/// Exponents e in [0, n) with g(omega^e) = 0, ascending.
/// Requires g to divide z^n - 1.
std::vector<uint32_t> root_exponents(const PolyF2 &g, const FieldContext &ctx);

struct CosetPartition {
    uint32_t n = 0;
    /// Orbits of multiplication by 2 mod n, each sorted, ordered by smallest
    /// element.
    std::vector<std::vector<uint32_t>> cosets;
};

CosetPartition cyclotomic_cosets(uint32_t n);

/// Product of (z - omega^e) over a cyclotomic coset; has GF(2) coefficients.
PolyF2 minimal_polynomial(const std::vector<uint32_t> &coset, const FieldContext &ctx);

/// Minimal polynomials of all cyclotomic cosets, i.e. the irreducible
/// factors of z^n - 1, in coset order.
std::vector<PolyF2> cyclic_modulus_factors(const FieldContext &ctx);

}  // namespace bbshot

#endif
