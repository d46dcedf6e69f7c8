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

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bbshot/bbcode.h"
#include "bbshot/decode.h"
#include "bbshot/simkit.h"
#include "bbshot/spec_file.h"
#include "bbshot/syndist.h"

namespace py = pybind11;
using namespace bbshot;

namespace {

Sector parse_sector(const std::string &s) {
    if (s == "X" || s == "x") {
        return Sector::X;
    }
    if (s == "Z" || s == "z") {
        return Sector::Z;
    }
    throw std::invalid_argument("sector must be 'X' or 'Z'");
}

py::array_t<uint8_t> to_numpy(const GF2Matrix &m) {
    py::array_t<uint8_t> out({m.nrows(), m.ncols()});
    auto view = out.mutable_unchecked<2>();
    for (size_t r = 0; r < m.nrows(); r++) {
        for (size_t c = 0; c < m.ncols(); c++) {
            view(r, c) = m.get(r, c) ? 1 : 0;
        }
    }
    return out;
}

py::dict result_dict(const MCResult &r) {
    py::dict d;
    d["experiment"] = r.experiment;
    d["code"] = r.code;
    d["N"] = r.n_half;
    d["n"] = r.n;
    d["k"] = r.k;
    d["d_S"] = r.d_s;
    d["p"] = r.p;
    d["q"] = r.q;
    d["R"] = r.rounds;
    d["trials"] = r.trials;
    d["failures"] = r.failures;
    d["rate"] = r.rate;
    d["ci_lo"] = r.ci_lo;
    d["ci_hi"] = r.ci_hi;
    d["seed"] = r.seed;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Coprime bivariate bicycle codes, syndrome-code analysis and BP+OSD simulation.";

    py::class_<BBCode>(m, "Code")
        .def_readonly("name", &BBCode::name)
        .def_readonly("N", &BBCode::n_half)
        .def_readonly("k", &BBCode::k)
        .def_property_readonly("n", &BBCode::n)
        .def_property_readonly("deg_g", &BBCode::deg_g)
        .def_property_readonly("g_exponents", [](const BBCode &c) { return c.g.exponents(); })
        .def_property_readonly("h_exponents", [](const BBCode &c) { return c.h.exponents(); })
        .def_property_readonly("hx", [](const BBCode &c) { return to_numpy(c.hx); })
        .def_property_readonly("hz", [](const BBCode &c) { return to_numpy(c.hz); })
        .def_property_readonly("rx", [](const BBCode &c) { return to_numpy(c.rx.matrix); })
        .def_property_readonly("rz", [](const BBCode &c) { return to_numpy(c.rz.matrix); })
        .def_readonly("warnings", &BBCode::warnings)
        .def("report", [](const BBCode &c) { return code_report(c).text(); })
        .def(
            "structure_checks",
            [](const BBCode &c) {
                py::dict d;
                for (const auto &r : verify_structure(c)) {
                    d[py::str(r.name)] = r.ok;
                }
                return d;
            })
        .def("__repr__", [](const BBCode &c) {
            return "<bbshot.Code " + c.name + " [[" + std::to_string(c.n()) + "," + std::to_string(c.k) + "]]>";
        });

    m.def(
        "build",
        [](uint32_t n_half, std::vector<long long> a, std::vector<long long> b, std::string name) {
            BBParams p;
            p.name = std::move(name);
            p.n_half = n_half;
            p.a_exponents = std::move(a);
            p.b_exponents = std::move(b);
            return build_bb(p);
        },
        py::arg("N"), py::arg("a"), py::arg("b"), py::arg("name") = "code",
        "Builds the code with A = a(z), B = b(z) in F2[z]/(z^N - 1).");
    m.def(
        "load", [](const std::string &path) { return build_bb(load_code_spec(path)); }, py::arg("path"),
        "Builds a code from a key=value spec file.");

    m.def(
        "analyze",
        [](const BBCode &code, const std::string &sector, uint64_t budget, uint32_t upper_trials, uint64_t seed) {
            AnalyzeOptions opts;
            opts.budget = budget;
            opts.upper_trials = upper_trials;
            opts.seed = seed;
            SyndromeReport r = analyze_syndrome_code(code, parse_sector(sector), opts);
            py::dict d;
            d["N"] = r.n;
            d["dim"] = r.dim;
            d["deg_g"] = r.deg_g;
            d["d_exact"] = r.d_exact;
            d["d_exact_source"] = r.d_exact_source;
            d["d_lower"] = r.d_lower;
            d["d_upper"] = r.d_upper;
            d["singleton_limit"] = r.singleton_limit;
            d["t_S"] = r.t_s;
            d["relation_distance"] = r.relation_distance;
            d["text"] = r.text();
            return d;
        },
        py::arg("code"), py::arg("sector") = "X", py::arg("budget") = kDefaultEnumerationBudget,
        py::arg("upper_trials") = 2000, py::arg("seed") = 1);

    m.def("p_fail_theory", &p_fail_theory, py::arg("n"), py::arg("t"), py::arg("q"),
          "Probability that more than t of n bits flip at rate q.");
    m.def(
        "round_condition",
        [](uint32_t t_s, uint32_t deg_g, uint32_t rounds) {
            RoundCondition rc = check_repeated_round_condition(t_s, deg_g, rounds);
            return py::make_tuple(rc.holds(), rc.text());
        },
        py::arg("t_S"), py::arg("deg_g"), py::arg("rounds"));
    m.def(
        "wilson_interval",
        [](uint64_t failures, uint64_t trials) {
            WilsonInterval w = wilson_interval(failures, trials);
            return py::make_tuple(w.lo, w.hi);
        },
        py::arg("failures"), py::arg("trials"));

    m.def(
        "simulate_logical",
        [](const BBCode &code, double p, double q, uint32_t rounds, const std::string &syndrome_decoder,
           const std::string &data_decoder, uint64_t max_trials, uint64_t min_failures, uint64_t seed,
           unsigned workers, bool soft_vote) {
            SyndromeReport rep = analyze_syndrome_code(code, Sector::X);
            LogicalCell cell;
            cell.experiment = "python";
            cell.code = &code;
            cell.d_s = rep.best_verified();
            cell.noise = NoiseConfig{p, q, std::nullopt};
            cell.pipeline.rounds = rounds;
            cell.pipeline.syndrome_decoder = parse_decoder_id(syndrome_decoder);
            cell.pipeline.data_decoder = parse_decoder_id(data_decoder);
            cell.pipeline.soft_vote = soft_vote;
            if (cell.pipeline.syndrome_decoder == DecoderKind::BdLookup) {
                cell.pipeline.syndrome_radius = rep.t_s;
            }
            std::vector<MCResult> res;
            {
                py::gil_scoped_release release;
                res = run_experiment({cell}, StopRule{max_trials, min_failures}, seed, workers);
            }
            return result_dict(res.at(0));
        },
        py::arg("code"), py::arg("p"), py::arg("q"), py::arg("rounds") = 1, py::arg("syndrome_decoder") = "bp",
        py::arg("data_decoder") = "bp-osd2", py::arg("max_trials") = 10000, py::arg("min_failures") = 100,
        py::arg("seed") = 1, py::arg("workers") = 1, py::arg("soft_vote") = true,
        "Monte Carlo logical error rate of the noisy-syndrome pipeline in the X sector.");

    m.def(
        "simulate_syndrome",
        [](const BBCode &code, double q, const std::string &decoder, uint64_t max_trials, uint64_t min_failures,
           uint64_t seed, unsigned workers) {
            SyndromeReport rep = analyze_syndrome_code(code, Sector::X);
            SyndromeOnlyCell cell = make_syndrome_only_cell(code, rep, q, parse_decoder_id(decoder), "python");
            std::vector<MCResult> res;
            {
                py::gil_scoped_release release;
                res = run_syndrome_only({cell}, StopRule{max_trials, min_failures}, seed, workers);
            }
            return result_dict(res.at(0));
        },
        py::arg("code"), py::arg("q"), py::arg("decoder") = "bd-lookup", py::arg("max_trials") = 10000,
        py::arg("min_failures") = 100, py::arg("seed") = 1, py::arg("workers") = 1,
        "Monte Carlo failure rate of decoding the syndrome code alone.");
}
