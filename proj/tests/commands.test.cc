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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

using namespace bbshot;

namespace {

const std::string kSpecs = BBSHOT_SPEC_DIR;

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(CliOptions opts) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_command(opts, out, err);
    return CliRun{code, out.str(), err.str()};
}

CliOptions opts(const std::string &command, const std::string &spec) {
    CliOptions o;
    o.command = command;
    o.spec_path = spec;
    return o;
}

std::string temp_spec(const std::string &name, const std::string &content) {
    auto dir = std::filesystem::temp_directory_path() / "bbshot_cli_test";
    std::filesystem::create_directories(dir);
    auto path = dir / name;
    std::ofstream(path) << content;
    return path.string();
}

std::string slurp(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

TEST(cli, construct_code_specs) {
    CliRun r1 = run(opts("construct", kSpecs + "/code1.spec"));
    ASSERT_EQ(r1.code, kExitOk) << r1.err;
    ASSERT_NE(r1.out.find("[[42,18,?]], deg g=9, r=9, rate=density=3/7"), std::string::npos);
    CliRun r2 = run(opts("construct", kSpecs + "/code2.spec"));
    ASSERT_NE(r2.out.find("[[126,30,?]], deg g=15"), std::string::npos);
    CliRun r3 = run(opts("construct", kSpecs + "/unit.spec"));
    ASSERT_EQ(r3.code, kExitOk);
    ASSERT_NE(r3.out.find("k=0"), std::string::npos);
    ASSERT_NE(r3.out.find("degenerate"), std::string::npos);
}

TEST(cli, analyze_reports_bounds) {
    CliRun r = run(opts("analyze", kSpecs + "/code1.spec"));
    ASSERT_EQ(r.code, kExitOk) << r.err;
    ASSERT_NE(r.out.find("d_exact=3  # exact"), std::string::npos);
    ASSERT_NE(r.out.find("name,N,dim,d_lower,d_exact,d_upper,singleton_limit,t_S"), std::string::npos);
}

TEST(cli, usage_errors_exit_two) {
    ASSERT_EQ(run(opts("construct", kSpecs + "/does_not_exist.spec")).code, kExitUsage);
    std::string bad = temp_spec("bad.spec", "N=21\na=0,3,9\nb=0,3,9\nwat=1\n");
    CliRun r = run(opts("construct", bad));
    ASSERT_EQ(r.code, kExitUsage);
    ASSERT_NE(r.err.find(":4:"), std::string::npos);
    std::string even = temp_spec("even.spec", "N=20\na=0,1\nb=0\n");
    ASSERT_EQ(run(opts("construct", even)).code, kExitUsage);
    std::string noseed = temp_spec(
        "noseed.spec", "kind=sim-logical\ncode=" + kSpecs + "/code1.spec\np=0.01\nq=p\nR=1\n");
    CliRun s = run(opts("sim-logical", noseed));
    ASSERT_EQ(s.code, kExitUsage);
    ASSERT_NE(s.err.find("seed"), std::string::npos);
}

TEST(cli, check_theorems_baseline_and_tamper) {
    CliRun ok = run(opts("check-theorems", kSpecs + "/baseline.spec"));
    ASSERT_EQ(ok.code, kExitOk) << ok.out;
    ASSERT_NE(ok.out.find("R=3 t_time=1 t_S=0"), std::string::npos);
    ASSERT_NE(ok.out.find("violated"), std::string::npos);

    CliOptions t = opts("check-theorems", kSpecs + "/baseline.spec");
    t.tamper_hx = std::make_pair(size_t{0}, size_t{3});
    CliRun bad = run(t);
    ASSERT_EQ(bad.code, kExitInvariant);
    ASSERT_NE(bad.out.find("[FAIL] structure/css"), std::string::npos);
}

TEST(cli, simulation_csv_is_reproducible_across_workers) {
    std::string spec = temp_spec(
        "det.spec",
        "kind=sim-logical\nname=det\ncode=" + kSpecs + "/code1.spec\np=0.02\nq=p\nR=1,2\nseed=77\nmax_trials=2000\n"
        "min_failures=30\n");
    auto dir = std::filesystem::temp_directory_path() / "bbshot_cli_test";
    CliOptions a = opts("sim-logical", spec);
    a.out = (dir / "a.csv").string();
    a.workers = 1;
    CliOptions b = a;
    b.out = (dir / "b.csv").string();
    b.workers = 3;
    ASSERT_EQ(run(a).code, kExitOk);
    ASSERT_EQ(run(b).code, kExitOk);
    std::string ca = slurp(*a.out);
    ASSERT_FALSE(ca.empty());
    ASSERT_EQ(ca, slurp(*b.out));
    ASSERT_EQ(ca.substr(0, ca.find('\n')), MCResult::csv_header());
}

TEST(cli, sim_syndrome_writes_theory_curve) {
    std::string spec = temp_spec(
        "syn.spec",
        "kind=sim-syndrome\nname=syn\ncode=" + kSpecs + "/baseline.spec\nq=0.01\ndecoder=bd-lookup\nseed=3\n"
        "max_trials=1000\n");
    auto dir = std::filesystem::temp_directory_path() / "bbshot_cli_test";
    CliOptions o = opts("sim-syndrome", spec);
    o.out = (dir / "syn.csv").string();
    ASSERT_EQ(run(o).code, kExitOk);
    std::string theory = slurp((dir / "syn.theory.csv").string());
    ASSERT_EQ(theory.substr(0, theory.find('\n')), "code,N,t_S,q,p_fail");
}
