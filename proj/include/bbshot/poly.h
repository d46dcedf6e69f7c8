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

#ifndef BBSHOT_POLY_H
#define BBSHOT_POLY_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bbshot {

/// Polynomial over GF(2), little-endian: bit i is the coefficient of z^i.
///
/// The word vector is kept trimmed (no trailing zero words), so the zero
/// polynomial is the empty vector and equality is plain vector equality.
class PolyF2 {
   public:
    PolyF2() = default;
    static PolyF2 monomial(size_t exponent);
    /// Builds from the low bits of `bits` (bit i = coefficient of z^i).
    static PolyF2 from_bits(uint64_t bits);

    bool is_zero() const {
        return words_.empty();
    }
    /// Degree, or nullopt for the zero polynomial.
    std::optional<size_t> degree() const;
    bool coeff(size_t k) const;
    void flip(size_t k);
    size_t weight() const;
    std::vector<size_t> exponents() const;

    PolyF2 &operator+=(const PolyF2 &other);
    PolyF2 operator+(const PolyF2 &other) const;
    /// Full product in F2[z] (no reduction).
    PolyF2 operator*(const PolyF2 &other) const;
    bool operator==(const PolyF2 &other) const = default;
    /// Orders by integer value of the coefficient vector.
    bool operator<(const PolyF2 &other) const;

    /// Adds other * z^shift into this polynomial.
    void add_shifted(const PolyF2 &other, size_t shift);

    /// Human readable form such as "1+z^3+z^9"; "0" for zero.
    std::string str() const;

   private:
    void trim();
    std::vector<uint64_t> words_;
};

struct PolyDivMod {
    PolyF2 quotient;
    PolyF2 remainder;
};

/// Sum of z^(e mod n) over `exponents`; repeated exponents cancel.
PolyF2 poly_from_exponents(size_t n, const std::vector<long long> &exponents);

/// z^n + 1, the modulus of the ring F2[z]/(z^n - 1).
PolyF2 cyclic_modulus(size_t n);

PolyF2 poly_gcd(const PolyF2 &a, const PolyF2 &b);
PolyDivMod poly_divmod(const PolyF2 &num, const PolyF2 &den);

/// Folds exponents modulo n.
PolyF2 reduce_mod(const PolyF2 &p, size_t n);

/// Product in F2[z]/(z^n - 1).
PolyF2 poly_mul_mod(const PolyF2 &a, const PolyF2 &b, size_t n);

/// Image under z -> z^{-1} in F2[z]/(z^n - 1).
PolyF2 reciprocal(const PolyF2 &p, size_t n);

/// True iff `d` divides `p` in F2[z].
bool divides(const PolyF2 &d, const PolyF2 &p);

}  // namespace bbshot

#endif
