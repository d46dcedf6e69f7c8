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

#ifndef BBSHOT_DECODE_H
#define BBSHOT_DECODE_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bbshot/bitvec.h"
#include "bbshot/gf2_matrix.h"

namespace bbshot {

enum class DecoderKind { Bp, BpOsd0, BpOsd2, BdLookup, Majority };

/// Accepts "bp", "bp-osd0", "bp-osd2", "bd-lookup", "majority".
DecoderKind parse_decoder_id(std::string_view id);
const char *decoder_id(DecoderKind kind);

/// Adjacency view of a parity-check matrix; edges are numbered check-major.
class TannerGraph {
   public:
    explicit TannerGraph(const GF2Matrix &h);

    size_t num_checks() const {
        return check_adj_.size();
    }
    size_t num_vars() const {
        return var_adj_.size();
    }
    const GF2Matrix &matrix() const {
        return h_;
    }
    const std::vector<uint32_t> &check_neighbors(size_t c) const {
        return check_adj_[c];
    }
    const std::vector<uint32_t> &var_neighbors(size_t v) const {
        return var_adj_[v];
    }
    /// First edge index of check c; its edges are contiguous.
    uint32_t check_edge_begin(size_t c) const {
        return check_edge_offset_[c];
    }
    /// Edge indices incident to variable v, in ascending check order.
    const std::vector<uint32_t> &var_edges(size_t v) const {
        return var_edges_[v];
    }
    size_t num_edges() const {
        return edge_var_.size();
    }

   private:
    GF2Matrix h_;
    std::vector<std::vector<uint32_t>> check_adj_;
    std::vector<std::vector<uint32_t>> var_adj_;
    std::vector<uint32_t> check_edge_offset_;
    std::vector<std::vector<uint32_t>> var_edges_;
    std::vector<uint32_t> edge_var_;
};

struct BPConfig {
    uint32_t max_iter = 100;
    /// Channel flip probability for the initial log-likelihood ratios.
    double prior = 0.01;
    /// Magnitude cap on messages and channel values.
    double clip = 30.0;
};

struct BPResult {
    BitVec hard;
    std::vector<double> llr;  // posterior; negative favors a flip
    /// Posterior averaged over all iterations run. On degenerate graphs BP
    /// can oscillate, and the last iterate then depends on where it stopped;
    /// the average is the steadier input for OSD.
    std::vector<double> llr_mean;
    bool converged = false;
    uint32_t iterations = 0;
};

/// Syndrome-conditioned sum-product decoder with a flooding schedule.
/// Holds message buffers, so one instance per thread.
class BpDecoder {
   public:
    explicit BpDecoder(const TannerGraph &graph);

    /// `channel_llr`, when non-empty, overrides the uniform prior per bit.
    BPResult decode(const BitVec &syndrome, const BPConfig &cfg, std::span<const double> channel_llr = {});

    const TannerGraph &graph() const {
        return *graph_;
    }

   private:
    const TannerGraph *graph_;
    std::vector<double> var_to_check_;
    std::vector<double> check_to_var_;
    std::vector<double> channel_;
    std::vector<double> scratch_;
};

BPResult bp_decode(const TannerGraph &graph, const BitVec &syndrome, const BPConfig &cfg);

/// log((1 - p) / p), clipped to [-clip, clip].
double llr_from_probability(double p, double clip = 30.0);

/// Ordered-statistics post-processing.
///
/// Columns are sorted by posterior llr ascending (most likely flipped first,
/// ties by index) and eliminated in that order, so the pivot columns are the
/// most suspect independent positions and the non-pivot columns form the
/// most reliable information set. OSD-0 fixes the non-pivot bits to the hard
/// decisions of `llr` and solves for the pivots. Order 2 additionally tries
/// flipping each single non-pivot bit and each pair among the first `window`
/// non-pivot positions, keeping the candidate of least cost
/// sum_{e_i = 1} w_i (earliest candidate wins ties).
///
/// The weights w default to |llr|. Passing the channel LLRs as `flip_cost`
/// scores candidates by prior likelihood instead, which is what keeps OSD
/// from trusting a BP posterior that split between degenerate columns.
///
/// Throws std::invalid_argument if `syndrome` is not in the image of `h`.
BitVec osd_postprocess(
    const GF2Matrix &h,
    const BitVec &syndrome,
    std::span<const double> llr,
    unsigned order,
    unsigned window = 12,
    std::span<const double> flip_cost = {});

/// Syndrome -> minimum-weight error table over all patterns of weight
/// <= radius. Within a weight, the lexicographically first pattern wins.
class BoundedDistanceLookup {
   public:
    static constexpr uint64_t kDefaultBudget = 10'000'000;

    BoundedDistanceLookup(const GF2Matrix &h, uint32_t radius, uint64_t budget = kDefaultBudget);

    /// Error estimate, or nullopt when the syndrome is not in the table.
    std::optional<BitVec> decode(const BitVec &syndrome) const;

    uint32_t radius() const {
        return radius_;
    }
    size_t size() const {
        return table_.size();
    }

   private:
    uint32_t radius_;
    size_t ncols_;
    std::unordered_map<BitVec, BitVec, BitVecHash> table_;
};

/// Per-column majority of R rounds; exact ties take the last round's value.
BitVec majority_vote(std::span<const BitVec> rounds);

/// For each column, how many rounds agree with the voted value.
std::vector<uint32_t> vote_agreement(std::span<const BitVec> rounds, const BitVec &voted);

}  // namespace bbshot

#endif
