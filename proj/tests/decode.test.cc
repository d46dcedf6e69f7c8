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
#include <random>

#include "gtest/gtest.h"

using namespace bbshot;

namespace {

GF2Matrix hamming() {
    return GF2Matrix::from_strings({"1010101", "0110011", "0001111"});
}

double soft_cost(const BitVec &e, const std::vector<double> &llr) {
    double c = 0;
    for (size_t i : e.ones()) {
        c += std::abs(llr[i]);
    }
    return c;
}

}  // namespace

TEST(decode, decoder_ids) {
    for (auto k : {DecoderKind::Bp, DecoderKind::BpOsd0, DecoderKind::BpOsd2, DecoderKind::BdLookup,
                   DecoderKind::Majority}) {
        ASSERT_EQ(parse_decoder_id(decoder_id(k)), k);
    }
    ASSERT_THROW(parse_decoder_id("min-sum"), std::invalid_argument);
}

TEST(decode, tanner_graph_mirrors_matrix) {
    GF2Matrix h = hamming();
    TannerGraph g(h);
    ASSERT_EQ(g.num_checks(), 3u);
    ASSERT_EQ(g.num_vars(), 7u);
    ASSERT_EQ(g.num_edges(), 12u);
    for (size_t c = 0; c < 3; c++) {
        for (uint32_t v : g.check_neighbors(c)) {
            ASSERT_TRUE(h.get(c, v));
        }
        ASSERT_EQ(g.check_neighbors(c).size(), h.row(c).weight());
    }
    for (size_t v = 0; v < 7; v++) {
        ASSERT_EQ(g.var_neighbors(v).size(), h.column(v).weight());
    }
}

TEST(decode, bp_zero_syndrome) {
    TannerGraph g(hamming());
    BPResult r = bp_decode(g, BitVec(3), BPConfig{});
    ASSERT_TRUE(r.hard.none());
    ASSERT_TRUE(r.converged);
    ASSERT_EQ(r.iterations, 1u);
}

TEST(decode, bp_corrects_single_errors_on_hamming) {
    GF2Matrix h = hamming();
    TannerGraph g(h);
    BPConfig cfg;
    cfg.prior = 0.01;
    for (size_t i = 0; i < 7; i++) {
        BitVec e = BitVec::from_indices(7, {i});
        BPResult r = bp_decode(g, matvec(h, e), cfg);
        ASSERT_TRUE(r.converged) << i;
        ASSERT_EQ(std::min_element(r.llr.begin(), r.llr.end()) - r.llr.begin(), static_cast<long>(i));
        // The weight-3 column sits on three short cycles; flooding BP stops
        // after one iteration at the weight-4 pattern that also matches.
        if (h.column(i).weight() < 3) {
            ASSERT_EQ(r.hard, e) << i;
        }
    }
}

TEST(decode, bp_reports_unsatisfiable_syndrome) {
    GF2Matrix h = GF2Matrix::from_strings({"110", "110"});
    TannerGraph g(h);
    BPConfig cfg;
    cfg.max_iter = 20;
    BPResult r = bp_decode(g, BitVec::from_string("10"), cfg);
    ASSERT_FALSE(r.converged);
    ASSERT_EQ(r.iterations, 20u);
}

TEST(decode, bp_validates_inputs) {
    TannerGraph g(hamming());
    ASSERT_THROW(bp_decode(g, BitVec(2), BPConfig{}), std::invalid_argument);
    BPConfig bad;
    bad.prior = 0.7;
    ASSERT_THROW(bp_decode(g, BitVec(3), bad), std::invalid_argument);
}

TEST(decode, osd_basics) {
    GF2Matrix h = hamming();
    std::vector<double> llr(7, 5.0);
    ASSERT_TRUE(osd_postprocess(h, BitVec(3), llr, 0).none());
    ASSERT_TRUE(osd_postprocess(h, BitVec(3), llr, 2).none());
    for (size_t i = 0; i < 7; i++) {
        std::vector<double> l = llr;
        l[i] = -5.0;
        BitVec e = BitVec::from_indices(7, {i});
        ASSERT_EQ(osd_postprocess(h, matvec(h, e), l, 0), e);
    }
    GF2Matrix dep = GF2Matrix::from_strings({"110", "110"});
    ASSERT_THROW(osd_postprocess(dep, BitVec::from_string("10"), std::vector<double>(3, 1.0), 0), std::invalid_argument);
}

TEST(decode, osd2_never_worse_than_osd0) {
    GF2Matrix h = hamming();
    std::mt19937_64 rng(17);
    std::normal_distribution<double> noise(0.0, 3.0);
    for (int draw = 0; draw < 40; draw++) {
        std::vector<double> llr(7);
        for (auto &x : llr) {
            x = noise(rng);
        }
        for (uint32_t s = 0; s < 8; s++) {
            BitVec syn(3);
            for (size_t b = 0; b < 3; b++) {
                syn.set(b, (s >> b) & 1);
            }
            BitVec e0 = osd_postprocess(h, syn, llr, 0);
            BitVec e2 = osd_postprocess(h, syn, llr, 2);
            ASSERT_EQ(matvec(h, e0), syn);
            ASSERT_EQ(matvec(h, e2), syn);
            ASSERT_LE(soft_cost(e2, llr), soft_cost(e0, llr) + 1e-12);
        }
    }
}

TEST(decode, bp_osd_output_always_satisfies_syndrome) {
    std::mt19937_64 rng(23);
    GF2Matrix h(12, 24);
    for (size_t r = 0; r < 12; r++) {
        for (size_t c = 0; c < 24; c++) {
            h.set(r, c, rng() % 4 == 0);
        }
    }
    TannerGraph g(h);
    BPConfig cfg;
    cfg.prior = 0.1;
    cfg.max_iter = 10;
    for (int t = 0; t < 100; t++) {
        BitVec e(24);
        for (size_t i = 0; i < 24; i++) {
            e.set(i, rng() % 6 == 0);
        }
        BitVec syn = matvec(h, e);
        BPResult r = bp_decode(g, syn, cfg);
        BitVec out = r.converged ? r.hard : osd_postprocess(h, syn, r.llr, 2);
        ASSERT_EQ(matvec(h, out), syn);
    }
}

TEST(decode, lookup_repetition_code) {
    GF2Matrix h = GF2Matrix::from_strings({"110", "011"});
    BoundedDistanceLookup table(h, 1);
    ASSERT_EQ(table.size(), 4u);
    for (size_t i = 0; i < 3; i++) {
        BitVec e = BitVec::from_indices(3, {i});
        ASSERT_EQ(table.decode(matvec(h, e)).value(), e);
    }
    BoundedDistanceLookup zero_only(h, 0);
    ASSERT_FALSE(zero_only.decode(BitVec::from_string("10")).has_value());
    ASSERT_THROW(BoundedDistanceLookup(GF2Matrix(10, 200), 4, 1000), std::length_error);
}

TEST(decode, lookup_prefers_lexicographically_first) {
    // Columns 0 and 1 are identical.
    GF2Matrix h = GF2Matrix::from_strings({"110", "001"});
    BoundedDistanceLookup table(h, 1);
    ASSERT_EQ(table.decode(BitVec::from_string("10")).value().str(), "100");
}

TEST(decode, majority_vote_rules) {
    std::vector<BitVec> three{BitVec::from_string("0"), BitVec::from_string("1"), BitVec::from_string("1")};
    ASSERT_EQ(majority_vote(three).str(), "1");
    std::vector<BitVec> one{BitVec::from_string("1011")};
    ASSERT_EQ(majority_vote(one), one[0]);
    std::vector<BitVec> two{BitVec::from_string("1"), BitVec::from_string("0")};
    ASSERT_EQ(majority_vote(two).str(), "0");
    ASSERT_EQ(vote_agreement(two, majority_vote(two)), (std::vector<uint32_t>{1}));
    ASSERT_THROW(majority_vote(std::vector<BitVec>{}), std::invalid_argument);
}

TEST(decode, majority_vote_corrects_minority_flips) {
    for (size_t r = 1; r <= 5; r++) {
        size_t t = (r - 1) / 2;
        for (size_t m = 1; m <= 8; m++) {
            // Every per-column flip count <= t, exhaustively over patterns of
            // the first column; other columns carry shifted copies.
            for (uint32_t pattern = 0; pattern < (1u << r); pattern++) {
                if (static_cast<size_t>(std::popcount(pattern)) > t) {
                    continue;
                }
                BitVec truth(m);
                for (size_t c = 0; c < m; c += 2) {
                    truth.set(c);
                }
                std::vector<BitVec> rounds(r, truth);
                for (size_t k = 0; k < r; k++) {
                    if ((pattern >> k) & 1) {
                        for (size_t c = 0; c < m; c++) {
                            rounds[k].flip(c);
                        }
                    }
                }
                ASSERT_EQ(majority_vote(rounds), truth);
            }
        }
    }
}

TEST(decode, llr_from_probability) {
    ASSERT_NEAR(llr_from_probability(0.01), std::log(99.0), 1e-12);
    ASSERT_EQ(llr_from_probability(0.0), 30.0);
    ASSERT_EQ(llr_from_probability(1.0), -30.0);
    ASSERT_EQ(llr_from_probability(0.5), 0.0);
}

TEST(decode, osd_flip_cost_on_twin_columns) {
    // Columns 0 and 1 coincide and the posterior marks both as flipped, as
    // BP does when it cannot break the tie. Scored by |llr| the twins look
    // expensive and order 2 trades them for the heavier {2, 4}; scored by
    // channel LLRs the weight-1 twin wins.
    GF2Matrix h = GF2Matrix::from_strings({"11001", "00111"});
    BitVec s = BitVec::from_string("10");
    std::vector<double> posterior{-9.0, -9.0, 2.0, 2.0, 3.0};
    std::vector<double> channel(5, 4.0);
    BitVec by_posterior = osd_postprocess(h, s, posterior, 2);
    ASSERT_EQ(matvec(h, by_posterior), s);
    ASSERT_EQ(by_posterior, BitVec::from_indices(5, {2, 4}));
    for (unsigned order : {0u, 2u}) {
        BitVec e = osd_postprocess(h, s, posterior, order, 12, channel);
        ASSERT_EQ(matvec(h, e), s);
        ASSERT_EQ(e.weight(), 1u);
        ASSERT_TRUE(e[0] || e[1]);
    }
    ASSERT_THROW(osd_postprocess(h, s, posterior, 2, 12, std::vector<double>(3, 1.0)), std::invalid_argument);
}

TEST(decode, bp_mean_posterior_has_one_entry_per_bit) {
    GF2Matrix h = hamming();
    TannerGraph g(h);
    BPConfig cfg;
    cfg.max_iter = 7;
    BPResult r = bp_decode(g, BitVec::from_string("111"), cfg);
    ASSERT_EQ(r.llr_mean.size(), 7u);
    if (r.iterations == 1) {
        ASSERT_EQ(r.llr_mean, r.llr);
    }
}
