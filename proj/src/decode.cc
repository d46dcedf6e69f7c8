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

#include "bbshot/decode.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bbshot {

DecoderKind parse_decoder_id(std::string_view id) {
    if (id == "bp") {
        return DecoderKind::Bp;
    }
    if (id == "bp-osd0") {
        return DecoderKind::BpOsd0;
    }
    if (id == "bp-osd2") {
        return DecoderKind::BpOsd2;
    }
    if (id == "bd-lookup") {
        return DecoderKind::BdLookup;
    }
    if (id == "majority") {
        return DecoderKind::Majority;
    }
    throw std::invalid_argument(
        "unknown decoder '" + std::string(id) + "' (expected bp, bp-osd0, bp-osd2, bd-lookup or majority)");
}

const char *decoder_id(DecoderKind kind) {
    switch (kind) {
        case DecoderKind::Bp:
            return "bp";
        case DecoderKind::BpOsd0:
            return "bp-osd0";
        case DecoderKind::BpOsd2:
            return "bp-osd2";
        case DecoderKind::BdLookup:
            return "bd-lookup";
        case DecoderKind::Majority:
            return "majority";
    }
    return "?";
}

TannerGraph::TannerGraph(const GF2Matrix &h)
    : h_(h), check_adj_(h.nrows()), var_adj_(h.ncols()), check_edge_offset_(h.nrows()), var_edges_(h.ncols()) {
    for (size_t c = 0; c < h.nrows(); c++) {
        check_edge_offset_[c] = static_cast<uint32_t>(edge_var_.size());
        for (size_t v : h.row(c).ones()) {
            check_adj_[c].push_back(static_cast<uint32_t>(v));
            var_adj_[v].push_back(static_cast<uint32_t>(c));
            var_edges_[v].push_back(static_cast<uint32_t>(edge_var_.size()));
            edge_var_.push_back(static_cast<uint32_t>(v));
        }
    }
}

double llr_from_probability(double p, double clip) {
    if (p <= 0) {
        return clip;
    }
    if (p >= 1) {
        return -clip;
    }
    return std::clamp(std::log((1 - p) / p), -clip, clip);
}

BpDecoder::BpDecoder(const TannerGraph &graph)
    : graph_(&graph),
      var_to_check_(graph.num_edges()),
      check_to_var_(graph.num_edges()),
      channel_(graph.num_vars()),
      scratch_(graph.num_edges() + 1) {
}

BPResult BpDecoder::decode(const BitVec &syndrome, const BPConfig &cfg, std::span<const double> channel_llr) {
    const TannerGraph &g = *graph_;
    if (syndrome.size() != g.num_checks()) {
        throw std::invalid_argument("bp_decode: syndrome length differs from check count");
    }
    if (!channel_llr.empty() && channel_llr.size() != g.num_vars()) {
        throw std::invalid_argument("bp_decode: channel LLR length differs from variable count");
    }
    if (channel_llr.empty() && !(cfg.prior > 0 && cfg.prior < 0.5)) {
        throw std::invalid_argument("bp_decode: prior must lie in (0, 0.5)");
    }
    if (cfg.max_iter < 1) {
        throw std::invalid_argument("bp_decode: max_iter must be at least 1");
    }
    const double clip = cfg.clip;
    double uniform = llr_from_probability(cfg.prior, clip);
    for (size_t v = 0; v < g.num_vars(); v++) {
        channel_[v] = channel_llr.empty() ? uniform : std::clamp(channel_llr[v], -clip, clip);
        for (uint32_t e : g.var_edges(v)) {
            var_to_check_[e] = channel_[v];
        }
    }

    BPResult result;
    result.hard = BitVec(g.num_vars());
    result.llr.assign(g.num_vars(), 0.0);
    result.llr_mean.assign(g.num_vars(), 0.0);

    for (uint32_t it = 1; it <= cfg.max_iter; it++) {
        // Check-to-variable: tanh rule with leave-one-out products.
        for (size_t c = 0; c < g.num_checks(); c++) {
            size_t deg = g.check_neighbors(c).size();
            uint32_t base = g.check_edge_begin(c);
            double sign = syndrome[c] ? -1.0 : 1.0;
            // scratch_ holds suffix products: scratch_[k] = prod_{j >= k} t_j.
            scratch_[deg] = 1.0;
            for (size_t k = deg; k-- > 0;) {
                scratch_[k] = scratch_[k + 1] * std::tanh(0.5 * var_to_check_[base + k]);
            }
            double prefix = 1.0;
            for (size_t k = 0; k < deg; k++) {
                double t = std::tanh(0.5 * var_to_check_[base + k]);
                double excl = prefix * scratch_[k + 1];
                double msg = sign * 2.0 * std::atanh(excl);
                check_to_var_[base + k] = std::clamp(msg, -clip, clip);
                prefix *= t;
            }
        }
        // Variable update and hard decision.
        for (size_t v = 0; v < g.num_vars(); v++) {
            double total = channel_[v];
            for (uint32_t e : g.var_edges(v)) {
                total += check_to_var_[e];
            }
            result.llr[v] = total;
            result.hard.set(v, total < 0);
            for (uint32_t e : g.var_edges(v)) {
                var_to_check_[e] = std::clamp(total - check_to_var_[e], -clip, clip);
            }
        }
        for (size_t v = 0; v < g.num_vars(); v++) {
            result.llr_mean[v] += (result.llr[v] - result.llr_mean[v]) / it;
        }
        bool ok = true;
        for (size_t c = 0; c < g.num_checks() && ok; c++) {
            bool parity = false;
            for (uint32_t v : g.check_neighbors(c)) {
                parity ^= result.hard[v];
            }
            ok = parity == syndrome[c];
        }
        result.iterations = it;
        if (ok) {
            result.converged = true;
            break;
        }
    }
    return result;
}

BPResult bp_decode(const TannerGraph &graph, const BitVec &syndrome, const BPConfig &cfg) {
    BpDecoder dec(graph);
    return dec.decode(syndrome, cfg);
}

BitVec osd_postprocess(
    const GF2Matrix &h,
    const BitVec &syndrome,
    std::span<const double> llr,
    unsigned order,
    unsigned window,
    std::span<const double> flip_cost) {
    size_t n = h.ncols();
    if (syndrome.size() != h.nrows()) {
        throw std::invalid_argument("osd_postprocess: syndrome length differs from row count");
    }
    if (llr.size() != n) {
        throw std::invalid_argument("osd_postprocess: reliability vector length differs from column count");
    }
    if (order != 0 && order != 2) {
        throw std::invalid_argument("osd_postprocess: order must be 0 or 2");
    }
    if (!flip_cost.empty() && flip_cost.size() != n) {
        throw std::invalid_argument("osd_postprocess: cost vector length differs from column count");
    }

    std::vector<uint32_t> cols(n);
    std::iota(cols.begin(), cols.end(), 0);
    std::stable_sort(cols.begin(), cols.end(), [&](uint32_t x, uint32_t y) {
        return llr[x] < llr[y];
    });
    std::vector<uint32_t> position(n);
    for (size_t j = 0; j < n; j++) {
        position[cols[j]] = static_cast<uint32_t>(j);
    }

    std::vector<BitVec> rows;
    rows.reserve(h.nrows());
    for (size_t i = 0; i < h.nrows(); i++) {
        BitVec r(n + 1);
        for (size_t c : h.row(i).ones()) {
            r.set(position[c]);
        }
        r.set(n, syndrome[i]);
        rows.push_back(std::move(r));
    }
    std::vector<size_t> pivots = row_reduce(rows, n);
    size_t rk = pivots.size();
    for (size_t i = rk; i < rows.size(); i++) {
        if (rows[i][n]) {
            throw std::invalid_argument("osd_postprocess: syndrome is not in the image of H");
        }
    }

    std::vector<bool> is_pivot(n, false);
    for (size_t p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<size_t> free_pos;
    for (size_t j = 0; j < n; j++) {
        if (!is_pivot[j]) {
            free_pos.push_back(j);
        }
    }
    auto column_on_pivots = [&](size_t j) {
        BitVec v(rk);
        for (size_t r = 0; r < rk; r++) {
            if (rows[r][j]) {
                v.set(r);
            }
        }
        return v;
    };
    std::vector<BitVec> free_cols;
    free_cols.reserve(free_pos.size());
    for (size_t j : free_pos) {
        free_cols.push_back(column_on_pivots(j));
    }
    BitVec rhs(rk);
    for (size_t r = 0; r < rk; r++) {
        rhs.set(r, rows[r][n]);
    }

    auto rel = [&](size_t permuted) {
        size_t c = cols[permuted];
        return flip_cost.empty() ? std::abs(llr[c]) : flip_cost[c];
    };
    auto pivot_cost = [&](const BitVec &pv) {
        double cost = 0;
        for (size_t r : pv.ones()) {
            cost += rel(pivots[r]);
        }
        return cost;
    };

    // Base candidate: free bits at their hard decisions.
    std::vector<bool> base_free(free_pos.size(), false);
    BitVec base_pv = rhs;
    double base_free_cost = 0;
    for (size_t f = 0; f < free_pos.size(); f++) {
        if (llr[cols[free_pos[f]]] < 0) {
            base_free[f] = true;
            base_pv ^= free_cols[f];
            base_free_cost += rel(free_pos[f]);
        }
    }

    double best_cost = base_free_cost + pivot_cost(base_pv);
    BitVec best_pv = base_pv;
    std::vector<size_t> best_flips;

    if (order == 2) {
        auto flip_delta = [&](size_t f) {
            return base_free[f] ? -rel(free_pos[f]) : rel(free_pos[f]);
        };
        for (size_t f = 0; f < free_pos.size(); f++) {
            BitVec pv = base_pv ^ free_cols[f];
            double cost = base_free_cost + flip_delta(f) + pivot_cost(pv);
            if (cost < best_cost) {
                best_cost = cost;
                best_pv = std::move(pv);
                best_flips = {f};
            }
        }
        size_t w = std::min<size_t>(window, free_pos.size());
        for (size_t f1 = 0; f1 < w; f1++) {
            BitVec pv1 = base_pv ^ free_cols[f1];
            for (size_t f2 = f1 + 1; f2 < w; f2++) {
                BitVec pv = pv1 ^ free_cols[f2];
                double cost = base_free_cost + flip_delta(f1) + flip_delta(f2) + pivot_cost(pv);
                if (cost < best_cost) {
                    best_cost = cost;
                    best_pv = std::move(pv);
                    best_flips = {f1, f2};
                }
            }
        }
    }

    BitVec e(n);
    for (size_t r = 0; r < rk; r++) {
        if (best_pv[r]) {
            e.set(cols[pivots[r]]);
        }
    }
    std::vector<bool> free_bits = base_free;
    for (size_t f : best_flips) {
        free_bits[f] = !free_bits[f];
    }
    for (size_t f = 0; f < free_pos.size(); f++) {
        if (free_bits[f]) {
            e.set(cols[free_pos[f]]);
        }
    }
    return e;
}

BoundedDistanceLookup::BoundedDistanceLookup(const GF2Matrix &h, uint32_t radius, uint64_t budget)
    : radius_(radius), ncols_(h.ncols()) {
    // Table size is sum_{i <= radius} C(n, i).
    uint64_t total = 0;
    uint64_t term = 1;
    for (uint32_t i = 0; i <= radius && i <= ncols_; i++) {
        if (i > 0) {
            term = term * (ncols_ - i + 1) / i;
        }
        total += term;
        if (total > budget) {
            throw std::length_error(
                "BoundedDistanceLookup: table for radius " + std::to_string(radius) + " exceeds the budget of " +
                std::to_string(budget) + " entries");
        }
    }

    std::vector<BitVec> cols;
    for (size_t c = 0; c < ncols_; c++) {
        cols.push_back(h.column(c));
    }
    table_.reserve(total);
    table_.emplace(BitVec(h.nrows()), BitVec(ncols_));
    for (uint32_t w = 1; w <= radius && w <= ncols_; w++) {
        std::vector<size_t> idx(w);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            BitVec syn(h.nrows());
            for (size_t c : idx) {
                syn ^= cols[c];
            }
            if (!table_.contains(syn)) {
                table_.emplace(std::move(syn), BitVec::from_indices(ncols_, idx));
            }
            size_t pos = w;
            while (pos > 0 && idx[pos - 1] == ncols_ - w + pos - 1) {
                pos--;
            }
            if (pos == 0) {
                break;
            }
            idx[pos - 1]++;
            for (size_t j = pos; j < w; j++) {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
}

std::optional<BitVec> BoundedDistanceLookup::decode(const BitVec &syndrome) const {
    auto it = table_.find(syndrome);
    if (it == table_.end()) {
        return std::nullopt;
    }
    return it->second;
}

BitVec majority_vote(std::span<const BitVec> rounds) {
    if (rounds.empty()) {
        throw std::invalid_argument("majority_vote: need at least one round");
    }
    size_t m = rounds[0].size();
    size_t r = rounds.size();
    BitVec out(m);
    for (size_t c = 0; c < m; c++) {
        size_t ones = 0;
        for (const auto &round : rounds) {
            ones += round[c];
        }
        if (2 * ones > r) {
            out.set(c);
        } else if (2 * ones == r) {
            out.set(c, rounds.back()[c]);
        }
    }
    return out;
}

std::vector<uint32_t> vote_agreement(std::span<const BitVec> rounds, const BitVec &voted) {
    std::vector<uint32_t> out(voted.size(), 0);
    for (const auto &round : rounds) {
        for (size_t c = 0; c < voted.size(); c++) {
            out[c] += round[c] == voted[c];
        }
    }
    return out;
}

}  // namespace bbshot
