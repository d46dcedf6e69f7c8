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


#ifndef BBSHOT_RNG_H
#define BBSHOT_RNG_H

#include <cstdint>
#include <limits>

#include "bbshot/bitvec.h"

namespace bbshot {

/// SplitMix64 finalizer.
inline uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Seed of the random stream owned by one trial. Each coordinate passes
/// through the finalizer before the next is folded in, so nearby triples
/// give unrelated streams.
inline uint64_t substream_seed(uint64_t master_seed, uint64_t experiment_id, uint64_t trial_index) {
    uint64_t s = mix64(master_seed);
    s = mix64(s ^ experiment_id);
    return mix64(s ^ (trial_index * 0xD1B54A32D192ED03ull));
}

/// SplitMix64 generator; satisfies UniformRandomBitGenerator.
class SplitMix64 {
   public:
    using result_type = uint64_t;

    explicit SplitMix64(uint64_t seed) : state_(seed) {
    }

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return std::numeric_limits<uint64_t>::max();
    }
    result_type operator()() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

   private:
    uint64_t state_;
};

/// Independent Bernoulli(prob) bits; one draw per bit, even when prob is 0
/// or 1, so the stream position depends only on `length`.
inline BitVec sample_bits(size_t length, double prob, SplitMix64 &rng) {
    BitVec out(length);
    for (size_t k = 0; k < length; k++) {
        if (rng.uniform() < prob) {
            out.set(k);
        }
    }
    return out;
}

}  // namespace bbshot

#endif
