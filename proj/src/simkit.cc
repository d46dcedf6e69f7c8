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


#include "bbshot/simkit.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace bbshot {

namespace {

constexpr double kWilsonZ = 1.959963984540054;

void check_probability(double v, const char *what) {
    if (!(v >= 0 && v <= 1)) {
        throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
    }
}

unsigned osd_order(DecoderKind kind) {
    return kind == DecoderKind::BpOsd2 ? 2 : 0;
}

// Calls fn(indices) for every w-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_combination(size_t n, size_t w, Fn &&fn) {
    if (w > n) {
        return;
    }
    std::vector<size_t> idx(w);
    for (size_t j = 0; j < w; j++) {
        idx[j] = j;
    }
    while (true) {
        fn(idx);
        size_t pos = w;
        while (pos > 0 && idx[pos - 1] == n - w + pos - 1) {
            pos--;
        }
        if (pos == 0) {
            return;
        }
        idx[pos - 1]++;
        for (size_t j = pos; j < w; j++) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

std::string format_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string format_e(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.5e", v);
    return buf;
}

}  // namespace

void NoiseConfig::validate() const {
    check_probability(p, "p");
    check_probability(q, "q");
    check_probability(flip_prob(), "sector flip probability");
}

void PipelineConfig::validate() const {
    if (rounds < 1) {
        throw std::invalid_argument("pipeline: rounds must be at least 1");
    }
    if (data_decoder == DecoderKind::Majority) {
        throw std::invalid_argument("pipeline: 'majority' is not a data decoder");
    }
    if (syndrome_decoder == DecoderKind::BdLookup && !syndrome_radius) {
        throw std::invalid_argument("pipeline: bd-lookup syndrome stage needs a radius");
    }
    if (syndrome_bp.max_iter < 1 || data_bp.max_iter < 1) {
        throw std::invalid_argument("pipeline: max_iter must be at least 1");
    }
}

SectorPipeline::SectorPipeline(const BBCode &code, const PipelineConfig &cfg)
    : code_(&code),
      cfg_(cfg),
      checks_(code.checks(cfg.sector)),
      relations_(code.relations(cfg.sector).circulant),
      data_graph_(checks_),
      syndrome_graph_(relations_),
      stabilizers_(code.stabilizers_of_other_type(cfg.sector)) {
    cfg_.validate();
    if (relations_.ncols() != checks_.nrows()) {
        relations_ = GF2Matrix(0, checks_.nrows());
        syndrome_graph_ = TannerGraph(relations_);
    }
    if (cfg_.syndrome_decoder == DecoderKind::BdLookup) {
        syndrome_table_ = std::make_unique<BoundedDistanceLookup>(relations_, *cfg_.syndrome_radius);
    }
    if (cfg_.data_decoder == DecoderKind::BdLookup) {
        data_table_ = std::make_unique<BoundedDistanceLookup>(checks_, cfg_.data_radius);
    }
}

bool SectorPipeline::is_failure(const BitVec &error, const BitVec &estimate, uint32_t *residual_weight) const {
    BitVec r = error ^ estimate;
    if (residual_weight != nullptr) {
        *residual_weight = static_cast<uint32_t>(r.weight());
    }
    if (matvec(checks_, r).any()) {
        return true;
    }
    return !stabilizers_.contains(r);
}

SectorPipeline::Worker::Worker(const SectorPipeline &pipeline)
    : pipe_(&pipeline),
      syndrome_bp_(pipeline.syndrome_graph_),
      data_bp_(pipeline.data_graph_),
      syndrome_llr_(pipeline.checks_.nrows()),
      data_llr_(pipeline.checks_.ncols()) {
}

BitVec SectorPipeline::Worker::estimate_measurement_error(
    const BitVec &relation_syndrome, std::span<const double> channel_llr) {
    const SectorPipeline &p = *pipe_;
    const PipelineConfig &cfg = p.cfg_;
    size_t m = p.checks_.nrows();
    last_syndrome_posterior_.assign(channel_llr.begin(), channel_llr.end());
    switch (cfg.syndrome_decoder) {
        case DecoderKind::Majority:
            return BitVec(m);
        case DecoderKind::BdLookup: {
            auto hit = p.syndrome_table_->decode(relation_syndrome);
            return hit ? *hit : BitVec(m);
        }
        default:
            break;
    }
    BPResult res = syndrome_bp_.decode(relation_syndrome, cfg.syndrome_bp, channel_llr);
    last_syndrome_posterior_ = res.llr_mean;
    if (cfg.syndrome_decoder == DecoderKind::Bp || res.converged) {
        return res.hard;
    }
    return osd_postprocess(
        p.relations_, relation_syndrome, res.llr_mean, osd_order(cfg.syndrome_decoder), cfg.osd_window, channel_llr);
}

BitVec SectorPipeline::Worker::estimate_data_error(const BitVec &syndrome, double flip_prob, bool &converged) {
    const SectorPipeline &p = *pipe_;
    const PipelineConfig &cfg = p.cfg_;
    if (cfg.data_decoder == DecoderKind::BdLookup) {
        auto hit = p.data_table_->decode(syndrome);
        converged = hit.has_value();
        return hit ? *hit : BitVec(p.checks_.ncols());
    }
    std::fill(data_llr_.begin(), data_llr_.end(), llr_from_probability(flip_prob, cfg.data_bp.clip));
    BPResult res = data_bp_.decode(syndrome, cfg.data_bp, data_llr_);
    converged = res.converged;
    if (cfg.data_decoder == DecoderKind::Bp || res.converged) {
        return res.hard;
    }
    return osd_postprocess(
        p.checks_, syndrome, res.llr_mean, osd_order(cfg.data_decoder), cfg.osd_window, data_llr_);
}

TrialOutcome SectorPipeline::Worker::decode_cycle(
    const BitVec &error, std::span<const BitVec> measurement_noise, const NoiseConfig &noise) {
    const SectorPipeline &p = *pipe_;
    const PipelineConfig &cfg = p.cfg_;
    if (measurement_noise.empty()) {
        throw std::invalid_argument("decode_cycle: need at least one measurement round");
    }
    TrialOutcome out;
    BitVec ideal = matvec(p.checks_, error);

    std::vector<BitVec> rounds;
    rounds.reserve(measurement_noise.size());
    for (const auto &nu : measurement_noise) {
        rounds.push_back(ideal ^ nu);
    }
    BitVec voted = majority_vote(rounds);

    // Reliability of each voted bit: rounds that agree count for it, rounds
    // that disagree against it. Without soft votes every bit gets log((1-q)/q).
    double clip = cfg.syndrome_bp.clip;
    double base = llr_from_probability(noise.q, clip);
    if (cfg.soft_vote) {
        std::vector<uint32_t> agree = vote_agreement(rounds, voted);
        double r = static_cast<double>(rounds.size());
        for (size_t c = 0; c < syndrome_llr_.size(); c++) {
            syndrome_llr_[c] = std::clamp((2.0 * agree[c] - r) * base, -clip, clip);
        }
    } else {
        std::fill(syndrome_llr_.begin(), syndrome_llr_.end(), base);
    }

    BitVec relation_syndrome = matvec(p.relations_, voted);
    BitVec cleaned = voted ^ estimate_measurement_error(relation_syndrome, syndrome_llr_);
    if (matvec(p.relations_, cleaned).any()) {
        // Not a syndrome of any data error: project with OSD-0 on the
        // relations. This always succeeds since R * voted is in their image.
        out.syndrome_feasible = false;
        cleaned = voted ^ osd_postprocess(
                              p.relations_, relation_syndrome, last_syndrome_posterior_, 0, cfg.osd_window,
                              syndrome_llr_);
    }
    out.syndrome_cleaned_ok = cleaned == ideal;

    bool converged = false;
    BitVec estimate = estimate_data_error(cleaned, noise.flip_prob(), converged);
    out.decoder_converged = converged;
    out.logical_failure = p.is_failure(error, estimate, &out.residual_weight);
    return out;
}

bool adjudicate(const BitVec &e, const BitVec &e_hat, const BBCode &code, Sector sector) {
    if (e.size() != code.n() || e_hat.size() != code.n()) {
        throw std::invalid_argument("adjudicate: vectors must have length 2N");
    }
    BitVec r = e ^ e_hat;
    if (matvec(code.checks(sector), r).any()) {
        return true;
    }
    return !in_rowspace(r, code.stabilizers_of_other_type(sector));
}

TrialOutcome run_trial(
    const SectorPipeline &pipeline,
    SectorPipeline::Worker &worker,
    const NoiseConfig &noise,
    uint64_t master_seed,
    uint64_t experiment_id,
    uint64_t trial_index) {
    SplitMix64 rng(substream_seed(master_seed, experiment_id, trial_index));
    BitVec error = sample_bits(pipeline.checks().ncols(), noise.flip_prob(), rng);
    std::vector<BitVec> noise_rounds;
    noise_rounds.reserve(pipeline.config().rounds);
    for (uint32_t r = 0; r < pipeline.config().rounds; r++) {
        noise_rounds.push_back(sample_bits(pipeline.checks().nrows(), noise.q, rng));
    }
    return worker.decode_cycle(error, noise_rounds, noise);
}

TrialCount run_until(
    const StopRule &stop,
    unsigned workers,
    const std::function<std::function<bool(uint64_t)>()> &make_trial) {
    workers = std::max(1u, workers);
    std::vector<std::function<bool(uint64_t)>> trial_fns;
    for (unsigned w = 0; w < workers; w++) {
        trial_fns.push_back(make_trial());
    }
    constexpr uint64_t kPerWorker = 256;
    TrialCount out;
    std::vector<uint8_t> failed;
    uint64_t next = 0;
    while (next < stop.max_trials) {
        uint64_t block = std::min<uint64_t>(stop.max_trials - next, kPerWorker * workers);
        failed.assign(block, 0);
        if (workers == 1) {
            for (uint64_t i = 0; i < block; i++) {
                failed[i] = trial_fns[0](next + i);
            }
        } else {
            std::vector<std::exception_ptr> errors(workers);
            std::vector<std::thread> threads;
            for (unsigned w = 0; w < workers; w++) {
                threads.emplace_back([&, w]() {
                    try {
                        for (uint64_t i = w; i < block; i += workers) {
                            failed[i] = trial_fns[w](next + i);
                        }
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
            for (auto &t : threads) {
                t.join();
            }
            for (auto &e : errors) {
                if (e) {
                    std::rethrow_exception(e);
                }
            }
        }
        // Scan in trial order so the stopping point does not depend on the
        // thread count.
        for (uint64_t i = 0; i < block; i++) {
            out.trials++;
            out.failures += failed[i];
            if (stop.min_failures > 0 && out.failures >= stop.min_failures) {
                return out;
            }
        }
        next += block;
    }
    return out;
}

WilsonInterval wilson_interval(uint64_t failures, uint64_t trials) {
    if (trials == 0) {
        return WilsonInterval{0, 1};
    }
    double n = static_cast<double>(trials);
    double phat = static_cast<double>(failures) / n;
    double z2 = kWilsonZ * kWilsonZ;
    double denom = 1 + z2 / n;
    double center = (phat + z2 / (2 * n)) / denom;
    double half = kWilsonZ / denom * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n));
    WilsonInterval ci{std::max(0.0, center - half), std::min(1.0, center + half)};
    if (failures == 0) {
        ci.lo = 0;
    }
    if (failures == trials) {
        ci.hi = 1;
    }
    return ci;
}

double MCResult::sigma() const {
    if (trials == 0) {
        return 0;
    }
    return std::sqrt(rate * (1 - rate) / static_cast<double>(trials));
}

std::string MCResult::csv_header() {
    return "experiment,code,N,n,k,dS,p,q,R,trials,failures,rate,ci_lo,ci_hi,seed";
}

std::string MCResult::csv_row() const {
    std::ostringstream out;
    out << experiment << "," << code << "," << n_half << "," << n << "," << k << "," << d_s << "," << format_g(p)
        << "," << format_g(q) << "," << rounds << "," << trials << "," << failures << "," << format_e(rate) << ","
        << format_e(ci_lo) << "," << format_e(ci_hi) << "," << seed;
    return out.str();
}

namespace {

MCResult finish(MCResult r, const TrialCount &count) {
    r.trials = count.trials;
    r.failures = count.failures;
    r.rate = count.trials == 0 ? 0 : static_cast<double>(count.failures) / static_cast<double>(count.trials);
    WilsonInterval ci = wilson_interval(count.failures, count.trials);
    r.ci_lo = ci.lo;
    r.ci_hi = ci.hi;
    return r;
}

}  // namespace

std::vector<MCResult> run_experiment(
    const std::vector<LogicalCell> &grid,
    const StopRule &stop,
    uint64_t seed,
    unsigned workers,
    const std::function<void(const MCResult &)> &on_cell) {
    std::vector<MCResult> results;
    for (size_t cell_id = 0; cell_id < grid.size(); cell_id++) {
        const LogicalCell &cell = grid[cell_id];
        if (cell.code == nullptr) {
            throw std::invalid_argument("run_experiment: cell without a code");
        }
        cell.noise.validate();
        SectorPipeline pipeline(*cell.code, cell.pipeline);
        NoiseConfig noise = cell.noise;
        TrialCount count = run_until(stop, workers, [&]() {
            auto worker = std::make_shared<SectorPipeline::Worker>(pipeline);
            return [&pipeline, worker, noise, seed, cell_id](uint64_t t) {
                return run_trial(pipeline, *worker, noise, seed, cell_id, t).logical_failure;
            };
        });
        MCResult r;
        r.experiment = cell.experiment;
        r.code = cell.code->name;
        r.n_half = cell.code->n_half;
        r.n = cell.code->n();
        r.k = cell.code->k;
        r.d_s = cell.d_s;
        r.p = cell.noise.p;
        r.q = cell.noise.q;
        r.rounds = cell.pipeline.rounds;
        r.seed = seed;
        results.push_back(finish(r, count));
        if (on_cell) {
            on_cell(results.back());
        }
    }
    return results;
}

SyndromeOnlyCell make_syndrome_only_cell(
    const BBCode &code, const SyndromeReport &report, double q, DecoderKind decoder, std::string experiment) {
    SyndromeOnlyCell cell;
    cell.experiment = std::move(experiment);
    cell.code = code.name;
    cell.n_half = code.n_half;
    cell.n = code.n();
    cell.k = code.k;
    cell.d_s = report.best_verified();
    cell.t_s = report.t_s;
    cell.generator = syndrome_code(code, report.sector).generator_matrix;
    cell.checks = code.relations(report.sector).circulant;
    cell.q = q;
    cell.decoder = decoder;
    cell.radius = report.t_s;
    return cell;
}

std::vector<MCResult> run_syndrome_only(
    const std::vector<SyndromeOnlyCell> &grid,
    const StopRule &stop,
    uint64_t seed,
    unsigned workers,
    const std::function<void(const MCResult &)> &on_cell) {
    std::vector<MCResult> results;
    for (size_t cell_id = 0; cell_id < grid.size(); cell_id++) {
        const SyndromeOnlyCell &cell = grid[cell_id];
        check_probability(cell.q, "q");
        size_t len = cell.generator.ncols();
        if (cell.checks.ncols() != len) {
            throw std::invalid_argument("run_syndrome_only: generator and checks disagree on length");
        }
        TannerGraph graph(cell.checks);
        std::unique_ptr<BoundedDistanceLookup> table;
        if (cell.decoder == DecoderKind::BdLookup) {
            table = std::make_unique<BoundedDistanceLookup>(cell.checks, cell.radius);
        }
        std::vector<double> channel(len, llr_from_probability(cell.q, cell.bp.clip));

        TrialCount count = run_until(stop, workers, [&]() {
            auto bp = std::make_shared<BpDecoder>(graph);
            return [&cell, &table, &channel, bp, seed, cell_id, len](uint64_t t) {
                SplitMix64 rng(substream_seed(seed, cell_id, t));
                BitVec message = sample_bits(cell.generator.nrows(), 0.5, rng);
                BitVec word(len);
                for (size_t r : message.ones()) {
                    word ^= cell.generator.row(r);
                }
                BitVec received = word ^ sample_bits(len, cell.q, rng);
                BitVec syndrome = matvec(cell.checks, received);
                BitVec correction(len);
                if (cell.decoder == DecoderKind::BdLookup) {
                    auto hit = table->decode(syndrome);
                    if (!hit) {
                        return true;  // detected, not corrected
                    }
                    correction = *hit;
                } else if (cell.decoder != DecoderKind::Majority) {
                    BPResult res = bp->decode(syndrome, cell.bp, channel);
                    correction = res.hard;
                    if (!res.converged && cell.decoder != DecoderKind::Bp) {
                        correction = osd_postprocess(
                            cell.checks, syndrome, res.llr_mean, osd_order(cell.decoder), cell.osd_window, channel);
                    }
                }
                return (received ^ correction) != word;
            };
        });
        MCResult r;
        r.experiment = cell.experiment;
        r.code = cell.code;
        r.n_half = cell.n_half;
        r.n = cell.n;
        r.k = cell.k;
        r.d_s = cell.d_s;
        r.p = 0;
        r.q = cell.q;
        r.rounds = 1;
        r.seed = seed;
        results.push_back(finish(r, count));
        if (on_cell) {
            on_cell(results.back());
        }
    }
    return results;
}

std::string TheoryRow::csv_header() {
    return "code,N,t_S,q,p_fail";
}

std::string TheoryRow::csv_row() const {
    std::ostringstream out;
    out << code << "," << n_half << "," << t_s << "," << format_g(q) << "," << format_e(p_fail);
    return out.str();
}

std::vector<TheoryRow> theory_rows(const std::vector<SyndromeOnlyCell> &grid) {
    std::vector<TheoryRow> rows;
    for (const auto &cell : grid) {
        uint32_t len = static_cast<uint32_t>(cell.checks.ncols());
        rows.push_back(TheoryRow{cell.code, len, cell.t_s, cell.q, p_fail_theory(len, cell.t_s, cell.q)});
    }
    return rows;
}

std::string RoundCondition::text() const {
    std::ostringstream out;
    out << "R=" << rounds << " t_time=" << t_time << " t_S=" << t_s << " floor(deg_g/2)=" << half_deg_g << " "
        << (lower_ok ? "t_time<=t_S" : "t_time>t_S") << " " << (upper_ok ? "t_S<=floor(deg_g/2)" : "t_S>floor(deg_g/2)")
        << " -> " << (holds() ? "holds" : "violated");
    return out.str();
}

RoundCondition check_repeated_round_condition(uint32_t t_s, uint32_t deg_g, uint32_t rounds) {
    if (rounds < 1) {
        throw std::invalid_argument("check_repeated_round_condition: rounds must be at least 1");
    }
    RoundCondition c;
    c.rounds = rounds;
    c.t_time = (rounds - 1) / 2;
    c.t_s = t_s;
    c.half_deg_g = deg_g / 2;
    c.lower_ok = c.t_time <= t_s;
    c.upper_ok = t_s <= c.half_deg_g;
    return c;
}

SweepReport exhaustive_fault_sweep(
    const BBCode &code, const PipelineConfig &cfg, const NoiseConfig &noise, uint32_t data_weight, uint32_t meas_weight) {
    PipelineConfig one_round = cfg;
    one_round.rounds = 1;
    SectorPipeline pipeline(code, one_round);
    SectorPipeline::Worker worker(pipeline);
    size_t n = pipeline.checks().ncols();
    size_t m = pipeline.checks().nrows();

    std::vector<BitVec> meas_patterns;
    for (uint32_t w = 0; w <= meas_weight; w++) {
        for_each_combination(m, w, [&](const std::vector<size_t> &idx) {
            meas_patterns.push_back(BitVec::from_indices(m, idx));
        });
    }

    SweepReport report;
    for (uint32_t w = 1; w <= data_weight; w++) {
        for_each_combination(n, w, [&](const std::vector<size_t> &idx) {
            BitVec error = BitVec::from_indices(n, idx);
            for (const auto &nu : meas_patterns) {
                TrialOutcome o = worker.decode_cycle(error, std::span<const BitVec>(&nu, 1), noise);
                report.cases++;
                if (o.logical_failure) {
                    report.failures++;
                    if (report.examples.size() < 8) {
                        std::ostringstream ex;
                        ex << "data={";
                        for (size_t j = 0; j < idx.size(); j++) {
                            ex << (j ? "," : "") << idx[j];
                        }
                        ex << "} meas={";
                        auto ones = nu.ones();
                        for (size_t j = 0; j < ones.size(); j++) {
                            ex << (j ? "," : "") << ones[j];
                        }
                        ex << "}";
                        report.examples.push_back(ex.str());
                    }
                }
            }
        });
    }
    return report;
}

}  // namespace bbshot
