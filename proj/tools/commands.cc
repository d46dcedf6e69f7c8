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


#include "commands.h"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "bbshot/syndist.h"

namespace bbshot {

namespace {

std::vector<std::string> split_list(const std::string &text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t b = item.find_first_not_of(" \t");
        size_t e = item.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
    }
    return out;
}

double parse_double(const KeyValueFile &f, const SpecEntry &e, const std::string &item) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
        f.fail(e, "'" + item + "' is not a number");
    }
    return v;
}

uint64_t parse_u64(const KeyValueFile &f, const SpecEntry &e, const std::string &item) {
    // Accept "1e6"-style integers as well as plain digits.
    uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec == std::errc() && ptr == item.data() + item.size() && !item.empty()) {
        return v;
    }
    double d = parse_double(f, e, item);
    if (d < 0 || d != static_cast<double>(static_cast<uint64_t>(d))) {
        f.fail(e, "'" + item + "' is not a non-negative integer");
    }
    return static_cast<uint64_t>(d);
}

bool parse_bool(const KeyValueFile &f, const SpecEntry &e) {
    if (e.value == "true" || e.value == "on" || e.value == "1" || e.value == "yes") {
        return true;
    }
    if (e.value == "false" || e.value == "off" || e.value == "0" || e.value == "no") {
        return false;
    }
    f.fail(e, "'" + e.value + "' is not a boolean");
}

DecoderKind parse_decoder_entry(const KeyValueFile &f, const SpecEntry &e) {
    try {
        return parse_decoder_id(e.value);
    } catch (const std::invalid_argument &ex) {
        f.fail(e, ex.what());
    }
}

bool is_sim_kind(const std::string &kind) {
    return kind == "sim-syndrome" || kind == "sim-logical" || kind == "sim-rsweep";
}

struct LoadedCode {
    std::string path;
    BBParams params;
    std::unique_ptr<BBCode> code;
};

std::vector<LoadedCode> load_codes(const ExperimentSpec &spec, const CliOptions &opts) {
    std::vector<LoadedCode> codes;
    for (const auto &path : spec.code_paths) {
        LoadedCode lc;
        lc.path = path;
        lc.params = load_code_spec(path);
        lc.code = std::make_unique<BBCode>(build_bb(lc.params));
        if (opts.tamper_hx) {
            auto [r, c] = *opts.tamper_hx;
            if (r >= lc.code->hx.nrows() || c >= lc.code->hx.ncols()) {
                throw std::invalid_argument("--tamper-hx position is outside H_X");
            }
            lc.code->hx.flip(r, c);
        }
        codes.push_back(std::move(lc));
    }
    return codes;
}

AnalyzeOptions analyze_options(const ExperimentSpec &spec, const CliOptions &opts) {
    AnalyzeOptions a;
    a.upper_trials = spec.upper_trials;
    a.seed = opts.seed.value_or(spec.seed.value_or(1));
    a.workers = opts.workers;
    return a;
}

std::string theory_path(const std::string &out) {
    std::string stem = out;
    if (stem.size() > 4 && stem.compare(stem.size() - 4, 4, ".csv") == 0) {
        stem.resize(stem.size() - 4);
    }
    return stem + ".theory.csv";
}

void write_file(const std::string &path, const std::string &content) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) {
        std::filesystem::create_directories(p.parent_path());
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    f << content;
    if (!f) {
        throw std::runtime_error("error while writing '" + path + "'");
    }
}

std::string format_summary_row(const MCResult &r) {
    char buf[256];
    std::snprintf(
        buf,
        sizeof(buf),
        "%-10s p=%-8.3g q=%-8.3g R=%-2u trials=%-9llu failures=%-5llu rate=%.3e [%.3e, %.3e]",
        r.code.c_str(),
        r.p,
        r.q,
        r.rounds,
        static_cast<unsigned long long>(r.trials),
        static_cast<unsigned long long>(r.failures),
        r.rate,
        r.ci_lo,
        r.ci_hi);
    return buf;
}

// Sends CSV to the --out path (or the spec's), or to `out` when neither is set.
void emit_csv(const std::string &csv, const std::optional<std::string> &path, std::ostream &out) {
    if (path) {
        write_file(*path, csv);
    } else {
        out << csv;
    }
}

std::optional<std::string> output_path(const ExperimentSpec &spec, const CliOptions &opts) {
    return opts.out ? opts.out : spec.out;
}

int cmd_construct(const ExperimentSpec &spec, const CliOptions &opts, std::ostream &out) {
    std::string csv = CodeReport::csv_header() + "\n";
    for (const auto &lc : load_codes(spec, opts)) {
        CodeReport rep = code_report(*lc.code);
        out << rep.text();
        csv += rep.csv_row() + "\n";
    }
    auto path = output_path(spec, opts);
    if (path) {
        write_file(*path, csv);
    } else {
        out << csv;
    }
    return kExitOk;
}

int cmd_analyze(const ExperimentSpec &spec, const CliOptions &opts, std::ostream &out) {
    std::string csv = SyndromeReport::csv_header() + "\n";
    for (const auto &lc : load_codes(spec, opts)) {
        SyndromeReport rep = analyze_syndrome_code(*lc.code, spec.sector, analyze_options(spec, opts));
        out << rep.text();
        if (rep.deg_g == 0) {
            out << "# g = 1: every syndrome is reachable, the syndrome code is all of F2^N and there are no relations\n";
        } else if (rep.dim == 0) {
            out << "# empty syndrome code: no distance to report\n";
        }
        csv += rep.csv_row() + "\n";
    }
    auto path = output_path(spec, opts);
    if (path) {
        write_file(*path, csv);
    } else {
        out << csv;
    }
    return kExitOk;
}

StopRule stop_rule(const ExperimentSpec &spec, const CliOptions &opts) {
    StopRule stop;
    stop.max_trials = opts.max_trials.value_or(spec.max_trials.value_or(stop.max_trials));
    stop.min_failures = opts.min_failures.value_or(spec.min_failures.value_or(stop.min_failures));
    return stop;
}

std::vector<double> q_values_for(const ExperimentSpec &spec, double p) {
    if (spec.q_equals_p) {
        return {p};
    }
    return spec.q;
}

int cmd_sim_syndrome(const ExperimentSpec &spec, const CliOptions &opts, uint64_t seed, std::ostream &out) {
    DecoderKind decoder = spec.syndrome_decoder.value_or(DecoderKind::Bp);
    if (opts.decoder) {
        decoder = parse_decoder_id(*opts.decoder);
    }
    if (opts.syndrome_decoder) {
        decoder = parse_decoder_id(*opts.syndrome_decoder);
    }
    if (spec.q.empty()) {
        throw std::invalid_argument(spec.origin + ": sim-syndrome needs a q list");
    }
    auto codes = load_codes(spec, opts);
    std::vector<SyndromeOnlyCell> grid;
    for (const auto &lc : codes) {
        SyndromeReport rep = analyze_syndrome_code(*lc.code, spec.sector, analyze_options(spec, opts));
        for (double q : spec.q) {
            SyndromeOnlyCell cell = make_syndrome_only_cell(*lc.code, rep, q, decoder, spec.name);
            cell.bp.max_iter = spec.max_iter;
            cell.osd_window = spec.osd_window;
            if (spec.syndrome_radius) {
                cell.radius = *spec.syndrome_radius;
            }
            grid.push_back(std::move(cell));
        }
    }
    auto path = output_path(spec, opts);
    std::ostream &log = path ? out : std::cerr;
    auto results = run_syndrome_only(grid, stop_rule(spec, opts), seed, opts.workers, [&](const MCResult &r) {
        log << format_summary_row(r) << "\n";
    });
    std::string csv = MCResult::csv_header() + "\n";
    for (const auto &r : results) {
        csv += r.csv_row() + "\n";
    }
    std::string theory = TheoryRow::csv_header() + "\n";
    for (const auto &t : theory_rows(grid)) {
        theory += t.csv_row() + "\n";
    }
    emit_csv(csv, path, out);
    if (path) {
        write_file(theory_path(*path), theory);
    } else {
        out << theory;
    }
    return kExitOk;
}

int cmd_sim_logical(const ExperimentSpec &spec, const CliOptions &opts, uint64_t seed, std::ostream &out) {
    if (spec.p.empty()) {
        throw std::invalid_argument(spec.origin + ": " + spec.kind + " needs a p list");
    }
    if (!spec.q_equals_p && spec.q.empty()) {
        throw std::invalid_argument(spec.origin + ": " + spec.kind + " needs a q list or q=p");
    }
    auto codes = load_codes(spec, opts);
    std::vector<SyndromeReport> reports;
    for (const auto &lc : codes) {
        reports.push_back(analyze_syndrome_code(*lc.code, spec.sector, analyze_options(spec, opts)));
    }
    std::vector<LogicalCell> grid;
    for (size_t ci = 0; ci < codes.size(); ci++) {
        for (double p : spec.p) {
            for (double q : q_values_for(spec, p)) {
                for (uint32_t rounds : spec.rounds) {
                    LogicalCell cell;
                    cell.experiment = spec.name;
                    cell.code = codes[ci].code.get();
                    cell.d_s = reports[ci].best_verified();
                    cell.noise.p = p;
                    cell.noise.q = q;
                    PipelineConfig &pc = cell.pipeline;
                    pc.rounds = rounds;
                    pc.sector = spec.sector;
                    pc.soft_vote = spec.soft_vote;
                    pc.osd_window = spec.osd_window;
                    pc.syndrome_bp.max_iter = spec.max_iter;
                    pc.data_bp.max_iter = spec.max_iter;
                    pc.data_radius = spec.data_radius;
                    if (spec.syndrome_decoder) {
                        pc.syndrome_decoder = *spec.syndrome_decoder;
                    }
                    if (spec.data_decoder) {
                        pc.data_decoder = *spec.data_decoder;
                    }
                    if (opts.decoder) {
                        pc.data_decoder = parse_decoder_id(*opts.decoder);
                    }
                    if (opts.syndrome_decoder) {
                        pc.syndrome_decoder = parse_decoder_id(*opts.syndrome_decoder);
                    }
                    pc.syndrome_radius = spec.syndrome_radius.value_or(reports[ci].t_s);
                    grid.push_back(cell);
                }
            }
        }
    }
    auto path = output_path(spec, opts);
    std::ostream &log = path ? out : std::cerr;
    auto results = run_experiment(grid, stop_rule(spec, opts), seed, opts.workers, [&](const MCResult &r) {
        log << format_summary_row(r) << "\n";
    });
    std::string csv = MCResult::csv_header() + "\n";
    for (const auto &r : results) {
        csv += r.csv_row() + "\n";
    }
    emit_csv(csv, path, out);
    return kExitOk;
}

int cmd_check_theorems(const ExperimentSpec &spec, const CliOptions &opts, std::ostream &out) {
    bool all_ok = true;
    auto line = [&](bool ok, const std::string &name, const std::string &detail) {
        out << (ok ? "[PASS] " : "[FAIL] ") << name << ": " << detail << "\n";
        all_ok &= ok;
    };
    for (const auto &lc : load_codes(spec, opts)) {
        const BBCode &code = *lc.code;
        out << "== " << code.name << " (" << lc.path << ")\n";
        for (const auto &c : verify_structure(code)) {
            line(c.ok, "structure/" + c.name, c.detail);
        }
        SyndromeReport rep = analyze_syndrome_code(code, spec.sector, analyze_options(spec, opts));
        if (rep.dim > 0) {
            std::ostringstream d;
            d << "bch=" << rep.d_lower << " exact=" << (rep.d_exact ? std::to_string(*rep.d_exact) : "?")
              << " search=" << rep.d_upper << " singleton=" << rep.singleton_limit;
            bool ok = rep.d_lower <= rep.d_upper && rep.d_upper <= rep.singleton_limit;
            if (rep.d_exact) {
                ok = ok && rep.d_lower <= *rep.d_exact && *rep.d_exact <= rep.singleton_limit &&
                     *rep.d_exact <= rep.d_upper;
            }
            line(ok, "distance_sandwich", d.str());
        } else {
            out << "[INFO] distance_sandwich: empty syndrome code\n";
        }
        if (spec.sweep) {
            PipelineConfig cfg;
            cfg.sector = spec.sector;
            cfg.syndrome_decoder = DecoderKind::BdLookup;
            cfg.syndrome_radius = spec.syndrome_radius.value_or(rep.t_s);
            cfg.data_decoder = spec.data_decoder.value_or(DecoderKind::BpOsd2);
            cfg.osd_window = spec.osd_window;
            NoiseConfig prior{0.01, 0.01, std::nullopt};
            SweepReport sw = exhaustive_fault_sweep(code, cfg, prior, 1, cfg.syndrome_radius.value());
            std::ostringstream d;
            d << sw.failures << " logical failures in " << sw.cases << " cases (data weight 1, measurement weight <= "
              << *cfg.syndrome_radius << ")";
            for (const auto &ex : sw.examples) {
                d << "\n       e.g. " << ex;
            }
            line(sw.failures == 0, "single_round_fault_sweep", d.str());
        }
        for (uint32_t r = 1; r <= spec.max_rounds_checked; r++) {
            RoundCondition rc = check_repeated_round_condition(rep.t_s, rep.deg_g, r);
            out << "[INFO] round_condition " << rc.text() << "\n";
        }
    }
    out << (all_ok ? "all checks passed\n" : "some checks FAILED\n");
    return all_ok ? kExitOk : kExitInvariant;
}

}  // namespace

ExperimentSpec parse_experiment_spec(const KeyValueFile &f, const std::string &base_dir) {
    ExperimentSpec s;
    s.origin = f.origin();
    for (const auto &e : f.entries()) {
        const std::string &k = e.key;
        if (k == "kind") {
            s.kind = e.value;
        } else if (k == "name") {
            s.name = e.value;
        } else if (k == "code") {
            std::filesystem::path p(e.value);
            s.code_paths.push_back(p.is_absolute() ? p.string() : (std::filesystem::path(base_dir) / p).string());
        } else if (k == "p") {
            s.p.clear();
            for (const auto &item : split_list(e.value)) {
                s.p.push_back(parse_double(f, e, item));
            }
        } else if (k == "q") {
            s.q.clear();
            s.q_equals_p = e.value == "p";
            if (!s.q_equals_p) {
                for (const auto &item : split_list(e.value)) {
                    s.q.push_back(parse_double(f, e, item));
                }
            }
        } else if (k == "R") {
            s.rounds.clear();
            for (const auto &item : split_list(e.value)) {
                uint64_t r = parse_u64(f, e, item);
                if (r < 1) {
                    f.fail(e, "R must be at least 1");
                }
                s.rounds.push_back(static_cast<uint32_t>(r));
            }
        } else if (k == "decoder" || k == "syndrome_decoder") {
            s.syndrome_decoder = parse_decoder_entry(f, e);
        } else if (k == "data_decoder") {
            s.data_decoder = parse_decoder_entry(f, e);
        } else if (k == "max_trials") {
            s.max_trials = parse_u64(f, e, e.value);
        } else if (k == "min_failures") {
            s.min_failures = parse_u64(f, e, e.value);
        } else if (k == "seed") {
            s.seed = parse_u64(f, e, e.value);
        } else if (k == "out") {
            s.out = e.value;
        } else if (k == "soft_vote") {
            s.soft_vote = parse_bool(f, e);
        } else if (k == "sector") {
            if (e.value != "X" && e.value != "Z") {
                f.fail(e, "sector must be X or Z");
            }
            s.sector = e.value == "X" ? Sector::X : Sector::Z;
        } else if (k == "osd_window") {
            s.osd_window = static_cast<unsigned>(parse_u64(f, e, e.value));
        } else if (k == "max_iter") {
            s.max_iter = static_cast<uint32_t>(parse_u64(f, e, e.value));
        } else if (k == "syndrome_radius") {
            s.syndrome_radius = static_cast<uint32_t>(parse_u64(f, e, e.value));
        } else if (k == "data_radius") {
            s.data_radius = static_cast<uint32_t>(parse_u64(f, e, e.value));
        } else if (k == "sweep") {
            s.sweep = parse_bool(f, e);
        } else if (k == "max_rounds_checked") {
            s.max_rounds_checked = static_cast<uint32_t>(parse_u64(f, e, e.value));
        } else if (k == "upper_trials") {
            s.upper_trials = static_cast<uint32_t>(parse_u64(f, e, e.value));
        } else {
            f.fail(e, "unknown key '" + k + "' in experiment specification");
        }
    }
    if (s.code_paths.empty()) {
        throw ParseError(f.origin(), 0, "no 'code' entries");
    }
    if (s.rounds.empty()) {
        throw ParseError(f.origin(), 0, "empty R list");
    }
    return s;
}

ExperimentSpec load_experiment_spec(const std::string &path) {
    KeyValueFile f = KeyValueFile::load(path);
    if (f.has("N")) {
        parse_code_spec(f);  // validate early for line-numbered errors
        ExperimentSpec s;
        s.origin = path;
        s.code_paths.push_back(path);
        return s;
    }
    std::string dir = std::filesystem::path(path).parent_path().string();
    return parse_experiment_spec(f, dir.empty() ? "." : dir);
}

int run_command(const CliOptions &opts, std::ostream &out, std::ostream &err) {
    if (!std::filesystem::is_regular_file(opts.spec_path)) {
        err << "error: spec file '" << opts.spec_path << "' not found\n";
        return kExitUsage;
    }
    try {
        ExperimentSpec spec = load_experiment_spec(opts.spec_path);
        if (!spec.kind.empty() && spec.kind != opts.command) {
            // A spec may be reused by other commands (e.g. analyze on syndrome_fer.spec);
            // only the simulation kinds must agree.
            if (is_sim_kind(opts.command) && is_sim_kind(spec.kind) &&
                !(opts.command == "sim-rsweep" && spec.kind == "sim-logical") &&
                !(opts.command == "sim-logical" && spec.kind == "sim-rsweep")) {
                err << "error: spec kind '" << spec.kind << "' does not match command '" << opts.command << "'\n";
                return kExitUsage;
            }
        }
        if (opts.command == "construct") {
            return cmd_construct(spec, opts, out);
        }
        if (opts.command == "analyze") {
            return cmd_analyze(spec, opts, out);
        }
        if (opts.command == "check-theorems") {
            return cmd_check_theorems(spec, opts, out);
        }
        if (is_sim_kind(opts.command)) {
            std::optional<uint64_t> seed = opts.seed ? opts.seed : spec.seed;
            if (!seed) {
                err << "error: simulation needs a seed (--seed or 'seed=' in the spec)\n";
                return kExitUsage;
            }
            if (opts.command == "sim-syndrome") {
                return cmd_sim_syndrome(spec, opts, *seed, out);
            }
            return cmd_sim_logical(spec, opts, *seed, out);
        }
        err << "error: unknown command '" << opts.command << "'\n";
        return kExitUsage;
    } catch (const ParseError &ex) {
        err << "parse error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error &ex) {
        err << "invariant violated: " << ex.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception &ex) {
        err << "error: " << ex.what() << "\n";
        return kExitInvariant;
    }
}

}  // namespace bbshot
