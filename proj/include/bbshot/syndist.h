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

#ifndef BBSHOT_SYNDIST_H
#define BBSHOT_SYNDIST_H

#include <cstdint>
#include <optional>
#include <string>

#include "bbshot/bbcode.h"
#include "bbshot/galois.h"
#include "bbshot/gf2_matrix.h"

namespace bbshot {

constexpr uint64_t kDefaultEnumerationBudget = uint64_t{1} << 26;

/// Longest cyclic run of consecutive root exponents of g.
struct BchRun {
    uint32_t start = 0;
    uint32_t delta = 1;  // run length + 1; d >= delta
};

BchRun bch_designed_distance(const PolyF2 &g, const FieldContext &ctx);

/// Minimum weight over all nonzero codewords of the row space of `gen`
/// (full row rank), by Gray-code enumeration split across `workers` threads.
/// Returns nullopt when 2^dim exceeds `budget`.
std::optional<uint32_t> min_distance_exact(
    const GF2Matrix &gen, uint64_t budget = kDefaultEnumerationBudget, unsigned workers = 1);

/// Upper bound on the minimum distance from a deterministic search: generator
/// rows, cyclic shifts and small multiples of `generator_poly` (when
/// non-zero), and `trials` random information-set re-encodings.
uint32_t min_distance_upper(
    const GF2Matrix &gen, const PolyF2 &generator_poly, uint32_t n, uint32_t trials, uint64_t seed);

struct SingletonCheck {
    bool holds = false;
    int margin = 0;  // (deg g + 1) - d
};

SingletonCheck singleton_check(uint32_t distance, uint32_t deg_g);

/// Probability that more than t of n independent bits flip, each with
/// probability q. Summed over the upper tail term by term in log space.
double p_fail_theory(uint32_t n, uint32_t t, double q);

/// Guaranteed correction radius floor((d - 1) / 2).
inline uint32_t correction_radius(uint32_t d) {
    return d == 0 ? 0 : (d - 1) / 2;
}

struct AnalyzeOptions {
    uint64_t budget = kDefaultEnumerationBudget;
    uint32_t upper_trials = 2000;
    uint64_t seed = 1;
    unsigned workers = 1;
};

struct SyndromeReport {
    std::string name;
    Sector sector = Sector::X;
    uint32_t n = 0;  // length of the syndrome code (N)
    uint32_t dim = 0;
    uint32_t deg_g = 0;
    std::optional<uint32_t> d_exact;
    std::string d_exact_source;  // "exact" or "bracket"
    uint32_t d_lower = 1;        // BCH designed distance
    uint32_t bch_start = 0;
    uint32_t d_upper = 0;
    uint32_t singleton_limit = 1;
    uint32_t t_s = 0;
    bool budget_exceeded = false;
    /// Minimum distance of the cyclic relation code generated by h, when
    /// enumerable. Informational.
    std::optional<uint32_t> relation_distance;

    /// Best verified distance: d_exact when known, else the BCH lower bound.
    uint32_t best_verified() const {
        return d_exact.value_or(d_lower);
    }
    std::string text() const;
    static std::string csv_header();
    std::string csv_row() const;
};

SyndromeReport analyze_syndrome_code(const BBCode &code, Sector sector, const AnalyzeOptions &opts = {});

}  // namespace bbshot

#endif
