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


#include "bbshot/poly.h"

#include <random>

#include "gtest/gtest.h"

using namespace bbshot;

namespace {

PolyF2 P(std::vector<long long> e) {
    PolyF2 p;
    for (long long x : e) {
        p.flip(static_cast<size_t>(x));
    }
    return p;
}

}  // namespace

TEST(poly, from_exponents) {
    ASSERT_EQ(poly_from_exponents(21, {0, 3, 9}).str(), "1+z^3+z^9");
    ASSERT_TRUE(poly_from_exponents(7, {}).is_zero());
    ASSERT_TRUE(poly_from_exponents(5, {2, 7}).is_zero());
    ASSERT_EQ(poly_from_exponents(5, {6}), P({1}));
    ASSERT_THROW(poly_from_exponents(0, {1}), std::invalid_argument);
}

TEST(poly, degree_and_weight) {
    ASSERT_FALSE(PolyF2().degree().has_value());
    ASSERT_EQ(P({0, 70}).degree(), 70u);
    ASSERT_EQ(P({0, 70}).weight(), 2u);
    ASSERT_EQ(PolyF2().str(), "0");
    ASSERT_EQ(P({0, 1}).str(), "1+z");
}

TEST(poly, gcd) {
    PolyF2 p = P({0, 1, 3});
    ASSERT_EQ(poly_gcd(p, PolyF2()), p);
    ASSERT_EQ(poly_gcd(P({0, 2}), P({0, 1})), P({0, 1}));
    PolyF2 g = poly_gcd(P({0, 3, 9}), cyclic_modulus(21));
    ASSERT_EQ(g.degree(), 9u);
    ASSERT_THROW(poly_gcd(PolyF2(), PolyF2()), std::invalid_argument);
}

TEST(poly, divmod) {
    PolyF2 zn = cyclic_modulus(21);
    PolyF2 g = poly_gcd(P({0, 3, 9}), zn);
    PolyDivMod d = poly_divmod(zn, g);
    ASSERT_TRUE(d.remainder.is_zero());
    ASSERT_EQ(d.quotient * g, zn);

    PolyDivMod e = poly_divmod(P({0, 3}), P({0, 1}));
    ASSERT_EQ(e.quotient, P({0, 1, 2}));
    ASSERT_TRUE(e.remainder.is_zero());

    PolyDivMod f = poly_divmod(P({0, 1, 2}), P({2}));
    ASSERT_EQ(f.quotient, P({0}));
    ASSERT_EQ(f.remainder, P({0, 1}));
    ASSERT_THROW(poly_divmod(P({1}), PolyF2()), std::domain_error);
}

TEST(poly, mul_mod) {
    ASSERT_EQ(poly_mul_mod(P({6}), P({1}), 7), P({0}));
    PolyF2 b = P({0, 2, 5});
    ASSERT_EQ(poly_mul_mod(P({0}), b, 7), b);
    PolyF2 zn = cyclic_modulus(15);
    PolyF2 g = poly_gcd(P({0, 1, 4}), zn);
    PolyF2 h = poly_divmod(zn, g).quotient;
    ASSERT_TRUE(poly_mul_mod(g, h, 15).is_zero());
}

TEST(poly, reciprocal) {
    ASSERT_EQ(reciprocal(P({0}), 9), P({0}));
    ASSERT_EQ(reciprocal(P({1}), 7), P({6}));
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; t++) {
        PolyF2 p = PolyF2::from_bits(rng() & ((1u << 13) - 1));
        ASSERT_EQ(reciprocal(reciprocal(p, 13), 13), p);
    }
}

TEST(poly, divides) {
    ASSERT_TRUE(divides(P({0, 1}), cyclic_modulus(9)));
    ASSERT_FALSE(divides(P({0, 1, 2}), cyclic_modulus(7)));
    ASSERT_TRUE(divides(P({0, 1, 2}), cyclic_modulus(9)));
}
