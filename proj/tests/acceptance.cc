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


// Acceptance suite. Each criterion prints exactly one line starting with
// PASS or FAIL, preceded by indented detail lines. The process exits with
// status 1 if any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bbshot/simkit.h"
#include "bbshot/syndist.h"
#include "commands.h"

using namespace bbshot;

namespace {

const std::string kSpecs = BBSHOT_SPEC_DIR;

struct Verdict {
    bool pass = false;
    std::string summary;
};

void detail(const std::string &s) {
    std::cout << "    " << s << "\n";
}

std::string fmt(const char *format, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char *format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

BBCode load(const std::string &name) {
    return build_bb(load_code_spec(kSpecs + "/" + name + ".spec"));
}

std::string mc_line(const MCResult &r) {
    return fmt(
        "%s R=%u p=%.3g q=%.3g: %llu/%llu rate=%.4e [%.4e, %.4e]",
        r.code.c_str(),
        r.rounds,
        r.p,
        r.q,
        static_cast<unsigned long long>(r.failures),
        static_cast<unsigned long long>(r.trials),
        r.rate,
        r.ci_lo,
        r.ci_hi);
}

// Lightest syndrome codeword of weight <= max_w, found by enumerating
// patterns and checking that H x = w has a solution.
std::string light_syndrome_witness(const BBCode &code, size_t max_w) {
    const GF2Matrix &h = code.checks(Sector::X);
    size_t n = h.nrows();
    RowSpaceReducer image(h.transpose());
    for (size_t w = 1; w <= max_w; w++) {
        std::vector<size_t> idx(w);
        for (size_t j = 0; j < w; j++) {
            idx[j] = j;
        }
        while (true) {
            BitVec v = BitVec::from_indices(n, idx);
            if (image.contains(v)) {
                auto pre = solve(h, v);
                std::string s;
                for (size_t i : idx) {
                    s += (s.empty() ? "" : ",") + std::to_string(i);
                }
                return fmt("syndrome pattern {%s} (weight %zu) = H_X e for a data error e of weight %zu", s.c_str(),
                           w, pre ? pre->weight() : size_t{0});
            }
            size_t pos = w;
            while (pos > 0 && idx[pos - 1] == n - w + pos - 1) {
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
    return "no syndrome codeword of weight <= " + std::to_string(max_w);
}

// ---------------------------------------------------------------------------

Verdict construction_identities() {
    BBCode c1 = load("code1");
    BBCode c2 = load("code2");
    CodeReport r1 = code_report(c1);
    CodeReport r2 = code_report(c2);
    detail(r1.text().substr(0, r1.text().find('\n')));
    detail(r2.text().substr(0, r2.text().find('\n')));
    size_t rank1 = rank(c1.hx);
    detail(fmt("code1: k=%u r_X=%u r_Z=%u rank(H_X)=%zu", c1.k, c1.r_x, c1.r_z, rank1));
    detail(fmt("code2: k=%u r_X=%u r_Z=%u", c2.k, c2.r_x, c2.r_z));
    bool ok = c1.k == 18 && c1.r_x == 9 && c1.r_z == 9 && rank1 == 12 && r1.rate == Fraction::make(3, 7) &&
              r1.density == Fraction::make(3, 7) && c2.k == 30 && c2.r_x == 15;
    return {ok, "code1 [[42,18]] r=9 rank 12 rate=density=3/7; code2 [[126,30]] r=15"};
}

Verdict code1_syndrome_distance() {
    BBCode c = load("code1");
    SyndromeCode sc = syndrome_code(c, Sector::X);
    auto d = min_distance_exact(sc.generator_matrix);
    uint32_t got = d.value_or(0);
    detail(fmt("syndrome code [21,%zu] generated by %s: exact minimum distance %u over %llu codewords",
               sc.generator_matrix.nrows(), sc.generator.str().c_str(), got,
               static_cast<unsigned long long>((uint64_t{1} << sc.generator_matrix.nrows()) - 1)));
    detail("witness: " + light_syndrome_witness(c, 3));
    auto rel = min_distance_exact(c.relations(Sector::X).matrix);
    detail(fmt("for comparison, the relation code <h> (dimension %zu) has distance %u",
               c.relations(Sector::X).matrix.nrows(), rel.value_or(0)));
    if (auto logical = find_low_weight_logical(c, Sector::X, 2)) {
        detail("weight-2 logical operator present, e.g. support {" + [&] {
            std::string s;
            for (size_t i : logical->ones()) {
                s += (s.empty() ? "" : ",") + std::to_string(i);
            }
            return s;
        }() + "}");
    }
    return {got == 4, fmt("d_S(code1) = %u, expected 4", got)};
}

Verdict code2_syndrome_distance() {
    BBCode c = load("code2");
    AnalyzeOptions opts;
    opts.upper_trials = 2000;
    SyndromeReport r = analyze_syndrome_code(c, Sector::X, opts);
    detail(fmt("BCH designed distance %u (run start %u); search upper bound %u; budget exceeded: %s",
               r.d_lower, r.bch_start, r.d_upper, r.budget_exceeded ? "yes" : "no"));
    detail("witness: " + light_syndrome_witness(c, 3));
    if (r.relation_distance) {
        detail(fmt("relation code <h> distance %u", *r.relation_distance));
    }
    bool ok = r.d_lower <= 10 && r.d_upper == 10;
    return {ok, fmt("bracket [%u, %u], expected delta <= 10 and lightest codeword found = 10", r.d_lower, r.d_upper)};
}

Verdict sandwich_sweep() {
    uint64_t checked = 0;
    uint64_t exceptions = 0;
    for (uint32_t n : {7u, 9u, 15u, 21u}) {
        FieldContext ctx = build_field_context(n);
        std::vector<PolyF2> factors = cyclic_modulus_factors(ctx);
        for (uint64_t mask = 0; mask < (uint64_t{1} << factors.size()); mask++) {
            PolyF2 g = PolyF2::from_bits(1);
            for (size_t i = 0; i < factors.size(); i++) {
                if ((mask >> i) & 1) {
                    g = g * factors[i];
                }
            }
            uint32_t deg = static_cast<uint32_t>(g.degree().value());
            uint32_t dim = n - deg;
            if (dim == 0 || dim > 16) {
                continue;
            }
            GF2Matrix gen(dim, n);
            for (uint32_t i = 0; i < dim; i++) {
                for (size_t e : g.exponents()) {
                    gen.set(i, (e + i) % n);
                }
            }
            uint32_t d = min_distance_exact(gen).value();
            uint32_t delta = bch_designed_distance(g, ctx).delta;
            checked++;
            if (!(delta <= d && d <= deg + 1)) {
                exceptions++;
                detail(fmt("N=%u g=%s: delta=%u d=%u deg+1=%u", n, g.str().c_str(), delta, d, deg + 1));
            }
        }
    }
    detail(fmt("%llu divisors checked", static_cast<unsigned long long>(checked)));
    return {exceptions == 0, fmt("%llu exceptions to delta <= d <= deg g + 1", static_cast<unsigned long long>(exceptions))};
}

Verdict fault_sweep() {
    BBCode c = load("code1");
    PipelineConfig cfg;
    cfg.syndrome_decoder = DecoderKind::BdLookup;
    cfg.syndrome_radius = 1;
    cfg.data_decoder = DecoderKind::BpOsd2;
    SweepReport r = exhaustive_fault_sweep(c, cfg, NoiseConfig{0.01, 0.01, std::nullopt}, 1, 1);
    for (const auto &ex : r.examples) {
        detail("failing case " + ex);
    }
    if (r.failures > 0) {
        detail("columns j and N+j of H_X coincide (a = b), so u_j and u_{N+j} share a syndrome and differ by a");
        detail("weight-2 logical operator; any decoder returns the wrong one of each pair for one of the two");
    }
    return {r.failures == 0,
            fmt("%llu logical failures in %llu cases", static_cast<unsigned long long>(r.failures),
                static_cast<unsigned long long>(r.cases))};
}

Verdict bounded_distance_sharpness() {
    std::vector<SyndromeOnlyCell> grid;
    for (const char *name : {"code1", "baseline"}) {
        BBCode c = load(name);
        SyndromeReport rep = analyze_syndrome_code(c, Sector::X);
        for (double q : {3e-3, 1e-2, 3e-2}) {
            grid.push_back(make_syndrome_only_cell(c, rep, q, DecoderKind::BdLookup, "sharpness"));
        }
    }
    auto results = run_syndrome_only(grid, StopRule{100000, 0}, 6006);
    auto theory = theory_rows(grid);
    bool ok = true;
    for (size_t i = 0; i < results.size(); i++) {
        double p = theory[i].p_fail;
        double sigma = std::sqrt(p * (1 - p) / static_cast<double>(results[i].trials));
        double z = sigma > 0 ? (results[i].rate - p) / sigma : 0;
        bool cell_ok = std::abs(z) <= 3 && results[i].trials >= 100000;
        ok &= cell_ok;
        detail(fmt("%s t_S=%u theory=%.4e z=%+.2f", mc_line(results[i]).c_str(), grid[i].t_s, p, z));
    }
    return {ok, "strict bounded-distance FER vs closed form within 3 sigma at 6 grid points"};
}

double loglog_slope(const std::vector<double> &x, const std::vector<double> &y) {
    double mx = 0, my = 0;
    for (size_t i = 0; i < x.size(); i++) {
        mx += std::log10(x[i]);
        my += std::log10(y[i]);
    }
    mx /= x.size();
    my /= y.size();
    double sxy = 0, sxx = 0;
    for (size_t i = 0; i < x.size(); i++) {
        sxy += (std::log10(x[i]) - mx) * (std::log10(y[i]) - my);
        sxx += (std::log10(x[i]) - mx) * (std::log10(x[i]) - mx);
    }
    return sxy / sxx;
}

Verdict syndrome_slopes() {
    const std::vector<double> qs{3e-3, 1e-2, 3e-2};
    std::vector<double> slopes;
    bool positive = true;
    for (const char *name : {"baseline", "code1"}) {
        BBCode c = load(name);
        SyndromeReport rep = analyze_syndrome_code(c, Sector::X);
        std::vector<SyndromeOnlyCell> grid;
        for (double q : qs) {
            grid.push_back(make_syndrome_only_cell(c, rep, q, DecoderKind::Bp, "slope"));
        }
        auto res = run_syndrome_only(grid, StopRule{1000000, 200}, 7007);
        std::vector<double> rates;
        for (const auto &r : res) {
            detail(mc_line(r));
            rates.push_back(r.rate);
            positive &= r.failures > 0;
        }
        slopes.push_back(positive ? loglog_slope(qs, rates) : 0);
        detail(fmt("%s: log-log slope %.3f", name, slopes.back()));
    }
    bool ok = positive && std::abs(slopes[0] - 1) <= 0.3 && slopes[1] >= 1.7;
    return {ok, fmt("BP syndrome FER slope: baseline %.2f (want 1 +- 0.3), code1 %.2f (want >= 1.7)", slopes[0],
                    slopes[1])};
}

std::vector<MCResult> logical_grid(
    const BBCode &code, uint32_t d_s, uint32_t t_s, const std::vector<std::pair<double, double>> &pq,
    const std::vector<uint32_t> &rounds, uint64_t seed, const StopRule &stop, bool soft_vote = true) {
    std::vector<LogicalCell> grid;
    for (auto [p, q] : pq) {
        for (uint32_t r : rounds) {
            LogicalCell cell;
            cell.experiment = "acceptance";
            cell.code = &code;
            cell.d_s = d_s;
            cell.noise.p = p;
            cell.noise.q = q;
            cell.pipeline.rounds = r;
            cell.pipeline.syndrome_decoder = DecoderKind::Bp;
            cell.pipeline.data_decoder = DecoderKind::BpOsd2;
            cell.pipeline.syndrome_radius = t_s;
            cell.pipeline.soft_vote = soft_vote;
            grid.push_back(cell);
        }
    }
    return run_experiment(grid, stop, seed, 1, [](const MCResult &r) { detail(mc_line(r)); });
}

Verdict single_vs_repeated() {
    BBCode c = load("code2");
    SyndromeReport rep = analyze_syndrome_code(c, Sector::X);
    std::vector<std::pair<double, double>> pq{{2e-3, 2e-3}, {5e-3, 5e-3}, {1e-2, 1e-2}};
    auto res = logical_grid(c, rep.best_verified(), rep.t_s, pq, {1, 3}, 8008, StopRule{1000000, 100});
    bool ok = true;
    for (size_t i = 0; i + 1 < res.size(); i += 2) {
        bool cell_ok = res[i].failures >= 100 && res[i + 1].failures >= 100 && res[i].rate <= 3 * res[i + 1].rate;
        detail(fmt("p=q=%.3g: P_L(R=1)/P_L(R=3) = %.3f", res[i].p, res[i].rate / res[i + 1].rate));
        ok &= cell_ok;
    }
    return {ok, "code2 BP+OSD-2: P_L(R=1) <= 3 P_L(R=3) at p=q in {2e-3, 5e-3, 1e-2}"};
}

bool plateau_test(const std::vector<MCResult> &res, std::string &why) {
    // res[i] holds R = i + 1.
    double l2 = std::log10(res[1].rate);
    double worst = 0;
    for (size_t r = 3; r <= 6; r++) {
        worst = std::max(worst, std::abs(std::log10(res[r - 1].rate) - l2));
    }
    bool improves = res[1].rate < res[0].rate;
    why = fmt("P_L(2) %s P_L(1), max |dlog10| over R=3..6 = %.3f", improves ? "<" : ">=", worst);
    return improves && worst <= 0.5 && res[1].failures > 0;
}

Verdict round_sweep() {
    std::vector<uint32_t> rounds{1, 2, 3, 4, 5, 6, 7, 8};
    StopRule stop{1000000, 100};
    BBCode good = load("code2");
    SyndromeReport good_rep = analyze_syndrome_code(good, Sector::X);
    auto g = logical_grid(good, good_rep.best_verified(), good_rep.t_s, {{1e-4, 5e-3}}, rounds, 9009, stop);
    std::string why_good;
    bool good_plateau = plateau_test(g, why_good);
    detail("code2: " + why_good);

    BBCode bad = load("baseline");
    SyndromeReport bad_rep = analyze_syndrome_code(bad, Sector::X);
    auto b = logical_grid(bad, bad_rep.best_verified(), bad_rep.t_s, {{1e-4, 5e-3}}, rounds, 9010, stop);
    std::string why_bad;
    bool bad_plateau = plateau_test(b, why_bad);
    detail("baseline: " + why_bad);

    // The same sweep with hard votes only (no vote-margin reliabilities).
    auto h = logical_grid(good, good_rep.best_verified(), good_rep.t_s, {{1e-4, 5e-3}}, {1, 2}, 9011, stop, false);
    detail(fmt("code2 with hard votes only: P_L(1)=%.4e P_L(2)=%.4e", h[0].rate, h[1].rate));

    return {good_plateau && !bad_plateau,
            fmt("code2 plateau after R=2: %s; baseline plateau: %s (want yes / no)", good_plateau ? "yes" : "no",
                bad_plateau ? "yes" : "no")};
}

Verdict round_condition_table() {
    bool ok = true;
    struct Expect {
        const char *name;
        std::vector<std::pair<uint32_t, bool>> rows;
    };
    std::vector<Expect> expects{
        {"code1", {{3, true}}},
        {"code2", {{1, true}, {2, true}, {3, true}, {4, true}, {5, true}, {6, true}, {7, true}, {8, true}, {9, true}}},
        {"baseline", {{3, false}}},
    };
    for (const auto &e : expects) {
        BBCode c = load(e.name);
        SyndromeReport rep = analyze_syndrome_code(c, Sector::X);
        for (auto [r, want] : e.rows) {
            RoundCondition rc = check_repeated_round_condition(rep.t_s, rep.deg_g, r);
            bool row_ok = rc.holds() == want;
            ok &= row_ok;
            detail(std::string(e.name) + ": " + rc.text() + (row_ok ? "" : "  <-- expected " +
                                                                              std::string(want ? "holds" : "violated")));
        }
    }
    return {ok, "round-count condition: code1 holds at R=3, code2 holds for R<=9, baseline violated at R=3"};
}

std::string slurp(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

Verdict determinism() {
    auto dir = std::filesystem::temp_directory_path() / "bbshot_acceptance";
    std::filesystem::create_directories(dir);
    struct Case {
        std::string command;
        std::string spec;
    };
    std::vector<Case> cases{
        {"sim-logical", "kind=sim-logical\nname=det\ncode=" + kSpecs + "/code1.spec\ncode=" + kSpecs +
                            "/code2.spec\np=1e-2\nq=p\nR=1,3\nseed=11\nmax_trials=20000\nmin_failures=50\n"},
        {"sim-syndrome", "kind=sim-syndrome\nname=det\ncode=" + kSpecs + "/code1.spec\nq=3e-2\ndecoder=bp\n"
                         "seed=12\nmax_trials=20000\nmin_failures=50\n"},
    };
    bool ok = true;
    for (size_t i = 0; i < cases.size(); i++) {
        auto spec_path = dir / ("det" + std::to_string(i) + ".spec");
        std::ofstream(spec_path) << cases[i].spec;
        std::string reference;
        for (unsigned workers : {1u, 2u, 4u}) {
            CliOptions o;
            o.command = cases[i].command;
            o.spec_path = spec_path.string();
            o.workers = workers;
            o.out = (dir / ("det" + std::to_string(i) + "_w" + std::to_string(workers) + ".csv")).string();
            std::ostringstream out, err;
            if (run_command(o, out, err) != kExitOk) {
                detail("command failed: " + err.str());
                ok = false;
                continue;
            }
            std::string bytes = slurp(*o.out);
            if (workers == 1) {
                reference = bytes;
            }
            bool same = bytes == reference && !bytes.empty();
            ok &= same;
            detail(fmt("%s workers=%u: %zu bytes, %s", cases[i].command.c_str(), workers, bytes.size(),
                       same ? "identical" : "DIFFERENT"));
        }
    }
    return {ok, "simulation CSVs byte-identical for 1, 2 and 4 workers"};
}

struct Criterion {
    int id;
    const char *title;
    double limit_seconds;
    std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"bbshot acceptance suite"};
    std::vector<int> selected;
    app.add_option("--criterion", selected, "Criterion numbers to run (default: all)");
    CLI11_PARSE(app, argc, argv);

    std::vector<Criterion> criteria{
        {1, "construction identities", 1, construction_identities},
        {2, "code1 syndrome distance", 1, code1_syndrome_distance},
        {3, "code2 syndrome distance bracket", 300, code2_syndrome_distance},
        {4, "distance sandwich over divisors", 120, sandwich_sweep},
        {5, "single-round exhaustive fault sweep", 60, fault_sweep},
        {6, "bounded-distance failure rate vs closed form", 300, bounded_distance_sharpness},
        {7, "syndrome FER slopes", 600, syndrome_slopes},
        {8, "single-shot vs three rounds", 3600, single_vs_repeated},
        {9, "rounds sweep plateau", 3600, round_sweep},
        {10, "round-count condition table", 60, round_condition_table},
        {11, "determinism across worker counts", 600, determinism},
    };
    bool all_ok = true;
    for (const auto &c : criteria) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) {
            continue;
        }
        std::cout << "criterion " << c.id << ": " << c.title << "\n";
        auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception &ex) {
            v = {false, std::string("exception: ") + ex.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = secs <= c.limit_seconds;
        bool pass = v.pass && in_time;
        all_ok &= pass;
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << v.summary
                  << fmt(" (%.2fs, limit %.0fs%s)", secs, c.limit_seconds, in_time ? "" : ", OVER TIME") << "\n"
                  << std::flush;
    }
    return all_ok ? 0 : 1;
}
