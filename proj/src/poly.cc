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

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bbshot {

PolyF2 PolyF2::monomial(size_t exponent) {
    PolyF2 p;
    p.flip(exponent);
    return p;
}

PolyF2 PolyF2::from_bits(uint64_t bits) {
    PolyF2 p;
    if (bits) {
        p.words_.push_back(bits);
    }
    return p;
}

void PolyF2::trim() {
    while (!words_.empty() && words_.back() == 0) {
        words_.pop_back();
    }
}

std::optional<size_t> PolyF2::degree() const {
    if (words_.empty()) {
        return std::nullopt;
    }
    return (words_.size() - 1) * 64 + 63 - std::countl_zero(words_.back());
}

bool PolyF2::coeff(size_t k) const {
    size_t w = k >> 6;
    return w < words_.size() && ((words_[w] >> (k & 63)) & 1);
}

void PolyF2::flip(size_t k) {
    size_t w = k >> 6;
    if (w >= words_.size()) {
        words_.resize(w + 1, 0);
    }
    words_[w] ^= uint64_t{1} << (k & 63);
    trim();
}

size_t PolyF2::weight() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

std::vector<size_t> PolyF2::exponents() const {
    std::vector<size_t> result;
    for (size_t w = 0; w < words_.size(); w++) {
        uint64_t bits = words_[w];
        while (bits) {
            result.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return result;
}

PolyF2 &PolyF2::operator+=(const PolyF2 &other) {
    if (other.words_.size() > words_.size()) {
        words_.resize(other.words_.size(), 0);
    }
    for (size_t k = 0; k < other.words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    trim();
    return *this;
}

PolyF2 PolyF2::operator+(const PolyF2 &other) const {
    PolyF2 result = *this;
    result += other;
    return result;
}

void PolyF2::add_shifted(const PolyF2 &other, size_t shift) {
    if (other.is_zero()) {
        return;
    }
    size_t word_shift = shift >> 6;
    unsigned bit_shift = shift & 63;
    size_t needed = other.words_.size() + word_shift + 1;
    if (words_.size() < needed) {
        words_.resize(needed, 0);
    }
    for (size_t k = 0; k < other.words_.size(); k++) {
        uint64_t w = other.words_[k];
        words_[k + word_shift] ^= w << bit_shift;
        if (bit_shift) {
            words_[k + word_shift + 1] ^= w >> (64 - bit_shift);
        }
    }
    trim();
}

PolyF2 PolyF2::operator*(const PolyF2 &other) const {
    PolyF2 result;
    for (size_t e : exponents()) {
        result.add_shifted(other, e);
    }
    return result;
}

bool PolyF2::operator<(const PolyF2 &other) const {
    if (words_.size() != other.words_.size()) {
        return words_.size() < other.words_.size();
    }
    for (size_t k = words_.size(); k-- > 0;) {
        if (words_[k] != other.words_[k]) {
            return words_[k] < other.words_[k];
        }
    }
    return false;
}

std::string PolyF2::str() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (size_t e : exponents()) {
        if (!out.empty()) {
            out += "+";
        }
        if (e == 0) {
            out += "1";
        } else if (e == 1) {
            out += "z";
        } else {
            out += "z^" + std::to_string(e);
        }
    }
    return out;
}

PolyF2 poly_from_exponents(size_t n, const std::vector<long long> &exponents) {
    if (n == 0) {
        throw std::invalid_argument("poly_from_exponents: modulus N must be positive");
    }
    PolyF2 p;
    auto nn = static_cast<long long>(n);
    for (long long e : exponents) {
        long long r = ((e % nn) + nn) % nn;
        p.flip(static_cast<size_t>(r));
    }
    return p;
}

PolyF2 cyclic_modulus(size_t n) {
    PolyF2 p = PolyF2::monomial(n);
    p.flip(0);
    return p;
}

PolyDivMod poly_divmod(const PolyF2 &num, const PolyF2 &den) {
    if (den.is_zero()) {
        throw std::domain_error("poly_divmod: division by the zero polynomial");
    }
    size_t dd = *den.degree();
    PolyDivMod out;
    out.remainder = num;
    while (true) {
        auto dr = out.remainder.degree();
        if (!dr || *dr < dd) {
            break;
        }
        size_t shift = *dr - dd;
        out.quotient.flip(shift);
        out.remainder.add_shifted(den, shift);
    }
    return out;
}

PolyF2 poly_gcd(const PolyF2 &a, const PolyF2 &b) {
    if (a.is_zero() && b.is_zero()) {
        throw std::invalid_argument("poly_gcd: gcd(0, 0) is undefined");
    }
    PolyF2 x = a;
    PolyF2 y = b;
    while (!y.is_zero()) {
        PolyF2 r = poly_divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

bool divides(const PolyF2 &d, const PolyF2 &p) {
    return poly_divmod(p, d).remainder.is_zero();
}

PolyF2 reduce_mod(const PolyF2 &p, size_t n) {
    PolyF2 out;
    for (size_t e : p.exponents()) {
        out.flip(e % n);
    }
    return out;
}

PolyF2 poly_mul_mod(const PolyF2 &a, const PolyF2 &b, size_t n) {
    if (n == 0) {
        throw std::invalid_argument("poly_mul_mod: modulus N must be positive");
    }
    std::vector<size_t> ea = reduce_mod(a, n).exponents();
    std::vector<size_t> eb = reduce_mod(b, n).exponents();
    std::vector<uint8_t> acc(n, 0);
    for (size_t i : ea) {
        for (size_t j : eb) {
            acc[(i + j) % n] ^= 1;
        }
    }
    PolyF2 out;
    for (size_t k = 0; k < n; k++) {
        if (acc[k]) {
            out.flip(k);
        }
    }
    return out;
}

PolyF2 reciprocal(const PolyF2 &p, size_t n) {
    PolyF2 out;
    for (size_t e : p.exponents()) {
        out.flip((n - e % n) % n);
    }
    return out;
}

}  // namespace bbshot
