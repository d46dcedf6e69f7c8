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

#ifndef BBSHOT_BITVEC_H
#define BBSHOT_BITVEC_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bbshot {

/// Fixed-length bit vector packed into 64-bit words.
///
/// Bits beyond `size()` in the last word are always clear, so word-wise
/// comparison and hashing are exact.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {
    }

    /// Parses a string of '0'/'1' characters.
    static BitVec from_string(std::string_view bits);
    static BitVec from_indices(size_t num_bits, const std::vector<size_t> &indices);

    size_t size() const {
        return num_bits_;
    }
    size_t num_words() const {
        return words_.size();
    }
    const uint64_t *words() const {
        return words_.data();
    }
    uint64_t *words() {
        return words_.data();
    }

    bool operator[](size_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1;
    }
    void set(size_t k, bool value = true) {
        uint64_t mask = uint64_t{1} << (k & 63);
        if (value) {
            words_[k >> 6] |= mask;
        } else {
            words_[k >> 6] &= ~mask;
        }
    }
    void flip(size_t k) {
        words_[k >> 6] ^= uint64_t{1} << (k & 63);
    }
    void clear() {
        for (auto &w : words_) {
            w = 0;
        }
    }

    BitVec &operator^=(const BitVec &other);
    BitVec &operator&=(const BitVec &other);
    BitVec operator^(const BitVec &other) const;
    bool operator==(const BitVec &other) const = default;

    size_t weight() const;
    bool any() const;
    bool none() const {
        return !any();
    }
    /// Parity of the bitwise AND with `other`.
    bool dot(const BitVec &other) const;
    /// Indices of set bits in ascending order.
    std::vector<size_t> ones() const;
    /// Index of the lowest set bit at or after `start`, or size() if none.
    size_t find_next(size_t start) const;

    std::string str() const;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

struct BitVecHash {
    size_t operator()(const BitVec &v) const;
};

}  // namespace bbshot

#endif
