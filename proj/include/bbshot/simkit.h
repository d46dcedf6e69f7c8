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


#ifndef BBSHOT_SIMKIT_H
#define BBSHOT_SIMKIT_H

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bbshot/bbcode.h"
#include "bbshot/decode.h"
#include "bbshot/rng.h"
#include "bbshot/syndist.h"

namespace bbshot {

struct NoiseConfig {
    double p = 0;  // per-cycle data error rate
    double q = 0;  // per-measurement flip probability
    /// Flip probability of a data qubit within the simulated sector;
    /// p / 2 unless overridden.
    std::optional<double> sector_flip_prob;

    double flip_prob() const {
        return sector_flip_prob.value_or(p / 2);
    }
    void validate() const;
};

struct PipelineConfig {
    uint32_t rounds = 1;
    DecoderKind syndrome_decoder = DecoderKind::Bp;
    DecoderKind data_decoder = DecoderKind::BpOsd2;
    /// Sector::X simulates Z errors against the H_X checks.
    Sector sector = Sector::X;
    /// When set, the syndrome-stage BP is seeded with per-check reliabilities
    /// from the vote margin instead of a flat prior of q. Identical to the
    /// flat prior for a single round. The voted syndrome itself always uses
    /// the last-round tie rule.
    bool soft_vote = true;
    BPConfig syndrome_bp;
    BPConfig data_bp;
    unsigned osd_window = 12;
    /// Radius of the syndrome-stage lookup table; required for bd-lookup.
    std::optional<uint32_t> syndrome_radius;
    uint32_t data_radius = 1;

    void validate() const;
};

struct TrialOutcome {
    bool syndrome_cleaned_ok = true;  // cleaned syndrome equals the ideal one
    bool syndrome_feasible = true;    // cleaned syndrome was in im(H) before projection
    bool decoder_converged = true;
    bool logical_failure = false;
    uint32_t residual_weight = 0;
};

/// Read-only decoding structures for one code, sector and configuration.
/// Share one instance between threads; give each thread its own Worker.
class SectorPipeline {
   public:
    SectorPipeline(const BBCode &code, const PipelineConfig &cfg);

    class Worker {
       public:
        explicit Worker(const SectorPipeline &pipeline);

        /// Decodes one cycle: `error` is the true sector error (length 2N),
        /// `measurement_noise` holds one flip pattern per round.
        TrialOutcome decode_cycle(
            const BitVec &error, std::span<const BitVec> measurement_noise, const NoiseConfig &noise);

        /// Syndrome-stage estimate of the measurement-error pattern, before
        /// projection. Exposed for the syndrome-only experiments.
        BitVec estimate_measurement_error(const BitVec &relation_syndrome, std::span<const double> channel_llr);

        /// Data-stage estimate; `converged` reports BP convergence or a table hit.
        BitVec estimate_data_error(const BitVec &syndrome, double flip_prob, bool &converged);

       private:
        const SectorPipeline *pipe_;
        BpDecoder syndrome_bp_;
        BpDecoder data_bp_;
        std::vector<double> syndrome_llr_;
        std::vector<double> data_llr_;
        std::vector<double> last_syndrome_posterior_;
    };

    const BBCode &code() const {
        return *code_;
    }
    const PipelineConfig &config() const {
        return cfg_;
    }
    const GF2Matrix &checks() const {
        return checks_;
    }
    const GF2Matrix &relations() const {
        return relations_;
    }
    /// Residual test: H r = 0 and r is a combination of stabilizers.
    bool is_failure(const BitVec &error, const BitVec &estimate, uint32_t *residual_weight = nullptr) const;

   private:
    const BBCode *code_;
    PipelineConfig cfg_;
    GF2Matrix checks_;
    GF2Matrix relations_;
    TannerGraph data_graph_;
    TannerGraph syndrome_graph_;
    RowSpaceReducer stabilizers_;
    std::unique_ptr<BoundedDistanceLookup> syndrome_table_;
    std::unique_ptr<BoundedDistanceLookup> data_table_;
};

/// True when e ^ e_hat is NOT a stabilizer of the sector (including a
/// residual with non-zero syndrome).
bool adjudicate(const BitVec &e, const BitVec &e_hat, const BBCode &code, Sector sector = Sector::X);

/// Samples and decodes one trial. The data error is drawn first, then one
/// measurement-noise pattern per round, all from the trial's own stream.
TrialOutcome run_trial(
    const SectorPipeline &pipeline,
    SectorPipeline::Worker &worker,
    const NoiseConfig &noise,
    uint64_t master_seed,
    uint64_t experiment_id,
    uint64_t trial_index);

struct StopRule {
    uint64_t max_trials = 1'000'000;
    uint64_t min_failures = 100;
};

struct TrialCount {
    uint64_t trials = 0;
    uint64_t failures = 0;
};

/// Runs trials 0, 1, 2, ... in parallel blocks and stops at the first trial
/// index where `min_failures` is reached (or at `max_trials`). The count is
/// independent of `workers`. `make_trial` is called once per thread and
/// returns a function from trial index to failure.
TrialCount run_until(
    const StopRule &stop,
    unsigned workers,
    const std::function<std::function<bool(uint64_t)>()> &make_trial);

struct WilsonInterval {
    double lo = 0;
    double hi = 1;
};

/// 95% Wilson score interval.
WilsonInterval wilson_interval(uint64_t failures, uint64_t trials);

struct MCResult {
    std::string experiment;
    std::string code;
    uint32_t n_half = 0;
    uint32_t n = 0;
    uint32_t k = 0;
    uint32_t d_s = 0;
    double p = 0;
    double q = 0;
    uint32_t rounds = 1;
    uint64_t trials = 0;
    uint64_t failures = 0;
    double rate = 0;
    double ci_lo = 0;
    double ci_hi = 1;
    uint64_t seed = 0;

    double sigma() const;
    static std::string csv_header();
    std::string csv_row() const;
};

struct LogicalCell {
    std::string experiment;
    const BBCode *code = nullptr;
    uint32_t d_s = 0;
    NoiseConfig noise;
    PipelineConfig pipeline;
};

/// Runs every cell in grid order; cell i uses experiment id i.
std::vector<MCResult> run_experiment(
    const std::vector<LogicalCell> &grid,
    const StopRule &stop,
    uint64_t seed,
    unsigned workers = 1,
    const std::function<void(const MCResult &)> &on_cell = {});

struct SyndromeOnlyCell {
    std::string experiment;
    std::string code;
    uint32_t n_half = 0;
    uint32_t n = 0;
    uint32_t k = 0;
    uint32_t d_s = 0;
    uint32_t t_s = 0;
    GF2Matrix generator;  // rows span the syndrome code
    GF2Matrix checks;     // parity checks of the syndrome code
    double q = 0;
    DecoderKind decoder = DecoderKind::BdLookup;
    uint32_t radius = 0;
    BPConfig bp;
    unsigned osd_window = 12;
};

/// Syndrome-only cell for a BB code's syndrome code, using `report` for the
/// distance columns and the lookup radius.
SyndromeOnlyCell make_syndrome_only_cell(
    const BBCode &code, const SyndromeReport &report, double q, DecoderKind decoder, std::string experiment);

/// Per trial: a uniformly random syndrome codeword, BSC(q) noise on it, and
/// a decode with the cell's decoder. A failure is any cleaned word that
/// differs from the transmitted codeword.
std::vector<MCResult> run_syndrome_only(
    const std::vector<SyndromeOnlyCell> &grid,
    const StopRule &stop,
    uint64_t seed,
    unsigned workers = 1,
    const std::function<void(const MCResult &)> &on_cell = {});

struct TheoryRow {
    std::string code;
    uint32_t n_half = 0;
    uint32_t t_s = 0;
    double q = 0;
    double p_fail = 0;

    static std::string csv_header();
    std::string csv_row() const;
};

std::vector<TheoryRow> theory_rows(const std::vector<SyndromeOnlyCell> &grid);

struct RoundCondition {
    uint32_t rounds = 1;
    uint32_t t_time = 0;      // floor((R - 1) / 2)
    uint32_t t_s = 0;
    uint32_t half_deg_g = 0;  // floor(deg g / 2)
    bool lower_ok = false;    // t_time <= t_S
    bool upper_ok = false;    // t_S <= floor(deg g / 2)

    bool holds() const {
        return lower_ok && upper_ok;
    }
    std::string text() const;
};

/// Whether one spatially decoded round can match an R-round majority vote.
RoundCondition check_repeated_round_condition(uint32_t t_s, uint32_t deg_g, uint32_t rounds);

struct SweepReport {
    uint64_t cases = 0;
    uint64_t failures = 0;
    std::vector<std::string> examples;  // first few failing cases
};

/// Decodes every (data error of weight <= data_weight, nonzero) x
/// (measurement error of weight <= meas_weight) combination for a single
/// round. `noise` only sets the decoder priors.
SweepReport exhaustive_fault_sweep(
    const BBCode &code,
    const PipelineConfig &cfg,
    const NoiseConfig &noise,
    uint32_t data_weight = 1,
    uint32_t meas_weight = 1);

}  // namespace bbshot

#endif
