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

#include "bbshot/bitvec.h"

#include <stdexcept>

namespace bbshot {

BitVec BitVec::from_string(std::string_view bits) {
    BitVec result(bits.size());
    for (size_t k = 0; k < bits.size(); k++) {
        if (bits[k] == '1') {
            result.set(k);
        } else if (bits[k] != '0') {
            throw std::invalid_argument("bit string contains a character other than '0' or '1'");
        }
    }
    return result;
}

BitVec BitVec::from_indices(size_t num_bits, const std::vector<size_t> &indices) {
    BitVec result(num_bits);
    for (size_t k : indices) {
        if (k >= num_bits) {
            throw std::out_of_range("bit index out of range");
        }
        result.flip(k);
    }
    return result;
}

BitVec &BitVec::operator^=(const BitVec &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVec length mismatch");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVec &BitVec::operator&=(const BitVec &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVec length mismatch");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

BitVec BitVec::operator^(const BitVec &other) const {
    BitVec result = *this;
    result ^= other;
    return result;
}

size_t BitVec::weight() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVec::any() const {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

bool BitVec::dot(const BitVec &other) const {
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

std::vector<size_t> BitVec::ones() const {
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

size_t BitVec::find_next(size_t start) const {
    if (start >= num_bits_) {
        return num_bits_;
    }
    size_t w = start >> 6;
    uint64_t bits = words_[w] & (~uint64_t{0} << (start & 63));
    while (true) {
        if (bits) {
            return w * 64 + std::countr_zero(bits);
        }
        w++;
        if (w >= words_.size()) {
            return num_bits_;
        }
        bits = words_[w];
    }
}

std::string BitVec::str() const {
    std::string result(num_bits_, '0');
    for (size_t k = 0; k < num_bits_; k++) {
        if ((*this)[k]) {
            result[k] = '1';
        }
    }
    return result;
}

size_t BitVecHash::operator()(const BitVec &v) const {
    uint64_t h = 0x9E3779B97F4A7C15ULL ^ v.size();
    for (size_t k = 0; k < v.num_words(); k++) {
        h ^= v.words()[k] + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
}

}  // namespace bbshot
