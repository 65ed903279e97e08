// Copyright 2026 The graylap Authors
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

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "json.hpp"

namespace graylap::cli {
namespace {

using nlohmann::json;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string &text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') {
            lines.push_back(line);
        }
    }
    return lines;
}

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> cells;
    std::istringstream in(line);
    std::string cell;
    while (std::getline(in, cell, ',')) {
        cells.push_back(cell);
    }
    return cells;
}

std::filesystem::path temp_dir() {
    auto dir = std::filesystem::temp_directory_path() / "graylap_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

TEST(ParseLists, RealListForms) {
    EXPECT_EQ(parse_real_list("0.1,0.2"), (std::vector<double>{0.1, 0.2}));
    const auto logs = parse_real_list("log:1e-3:1e-1:3");
    ASSERT_EQ(logs.size(), 3u);
    EXPECT_NEAR(logs[0], 1e-3, 1e-18);
    EXPECT_NEAR(logs[1], 1e-2, 1e-17);
    EXPECT_NEAR(logs[2], 1e-1, 1e-16);
    EXPECT_ANY_THROW((void)parse_real_list("log:1:2"));
    EXPECT_ANY_THROW((void)parse_real_list("abc"));
    EXPECT_EQ(parse_int_list("10,100"), (std::vector<int>{10, 100}));
    EXPECT_ANY_THROW((void)parse_int_list("1.5"));
}

TEST(TrotterSweep, FullGridRows) {
    const auto r = run_cli({"trotter-sweep", "--code", "brgc", "--n-min", "3", "--n-max", "8"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto lines = data_lines(r.out);
    ASSERT_EQ(lines.size(), 1u + 6u * 13u);
    EXPECT_EQ(lines[0], "n,lambda,code,error,bound_loose,bound_tight");
    EXPECT_EQ(r.out.rfind("# ", 0), 0u);
}

TEST(TrotterSweep, TwoQubitErrorsVanish) {
    const auto r = run_cli({"trotter-sweep", "--n-min", "2", "--n-max", "2"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto lines = data_lines(r.out);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        EXPECT_LT(std::stod(split(lines[i])[3]), 1e-12);
    }
}

TEST(TrotterSweep, CodesCoincideAtSmallLambda) {
    const std::vector<std::string> common{"--n-min", "3", "--n-max", "6", "--lambdas", "1e-3,3e-3,1e-2"};
    auto args_b = std::vector<std::string>{"trotter-sweep", "--code", "brgc"};
    auto args_n = std::vector<std::string>{"trotter-sweep", "--code", "binary"};
    args_b.insert(args_b.end(), common.begin(), common.end());
    args_n.insert(args_n.end(), common.begin(), common.end());
    const auto b = data_lines(run_cli(args_b).out);
    const auto n = data_lines(run_cli(args_n).out);
    ASSERT_EQ(b.size(), n.size());
    for (std::size_t i = 1; i < b.size(); ++i) {
        const double eb = std::stod(split(b[i])[3]);
        const double en = std::stod(split(n[i])[3]);
        EXPECT_NEAR(en / eb, 1.0, 0.1) << b[i] << " vs " << n[i];
    }
}

TEST(TrotterSweep, JsonFormat) {
    const auto r = run_cli({"trotter-sweep", "--n-min", "3", "--n-max", "3", "--lambdas", "0.01", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j.at("rows").size(), 1u);
    EXPECT_EQ(j.at("metadata").at("conventions").at("bit_order"), "high-significance");
    EXPECT_EQ(j.at("metadata").at("tool"), "graylap");
}

TEST(TrotterSweep, InvalidRangesExitTwo) {
    EXPECT_EQ(run_cli({"trotter-sweep", "--n-min", "6", "--n-max", "3"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"trotter-sweep", "--n-min", "3", "--n-max", "11"}).code, kExitUsage);
    const auto r = run_cli({"trotter-sweep", "--lambdas", "0.9"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("error"), std::string::npos);
    EXPECT_EQ(run_cli({"trotter-sweep", "--code", "ternary"}).code, kExitUsage);
}

TEST(BuildCircuit, FiveQubitMetricsSidecar) {
    const auto dir = temp_dir();
    const auto path = (dir / "brgc5.json").string();
    const auto r = run_cli({"build-circuit", "--encoding", "brgc", "--n", "5", "--out", path});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto side = json::parse(slurp(path + ".metrics.json"));
    const auto &m = side.at("metrics");
    EXPECT_EQ(m.at("counts").at("CCX"), 4);
    EXPECT_EQ(m.at("counts").at("CROTX"), 6);
    EXPECT_EQ(m.at("counts").at("ROTX"), 2);
    EXPECT_EQ(m.at("width"), 7);
    EXPECT_EQ(m.at("depth"), 11);
    EXPECT_EQ(json::parse(slurp(path)).at("gates").size(), 12u);
}

TEST(BuildCircuit, SmallCircuitsToStdout) {
    const auto qft = run_cli({"build-circuit", "--encoding", "qft", "--n", "3"});
    ASSERT_EQ(qft.code, kExitOk);
    EXPECT_EQ(json::parse(qft.out).at("gates").size(), 7u);
    EXPECT_EQ(json::parse(qft.err).at("metrics").at("gate_count"), 7);
    const auto two = run_cli({"build-circuit", "--encoding", "brgc", "--n", "2"});
    EXPECT_EQ(json::parse(two.out).at("gates").size(), 2u);
}

TEST(BuildCircuit, QasmAndFlags) {
    const auto r = run_cli({"build-circuit", "--encoding", "brgc", "--n", "5", "--format", "qasm", "--decompose-ccx"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out.rfind("OPENQASM 3.0;", 0), 0u);
    EXPECT_EQ(json::parse(r.err).at("metrics").at("gate_count"), 28);
    const auto c = run_cli({"build-circuit", "--encoding", "binary", "--n", "3", "--cancel"});
    EXPECT_EQ(c.code, kExitOk);
}

TEST(BuildCircuit, UnsupportedExportExitsTwo) {
    const auto r = run_cli({"build-circuit", "--encoding", "brgc-multicontrol", "--n", "5", "--format", "qasm"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("unsupported export"), std::string::npos);
    EXPECT_EQ(run_cli({"build-circuit", "--encoding", "brgc", "--n", "12"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"build-circuit", "--encoding", "gray"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"build-circuit", "--polarity", "sideways"}).code, kExitUsage);
}

TEST(Adiabatic, SummaryMeetsThresholds) {
    const auto r = run_cli({"adiabatic"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto pos = r.out.find("# summary: ");
    ASSERT_NE(pos, std::string::npos);
    const auto line = r.out.substr(pos + 11, r.out.find('\n', pos) - pos - 11);
    const auto s = json::parse(line);
    for (const char *e : {"brgc", "binary"}) {
        EXPECT_LT(s.at(e).at("rel_err_T").get<double>(), 7e-4) << e;
        EXPECT_LT(s.at(e).at("rel_err_V").get<double>(), 1.6e-4) << e;
    }
    EXPECT_GT(s.at("qft").at("deviation_MeV").get<double>(), 0.1);
    EXPECT_NEAR(s.at("commutator_TV_norm_MeV2").get<double>(), 111.3, 1.113);
    const auto lines = data_lines(r.out);
    EXPECT_EQ(lines[0], "step,time_MeVinv,evolver,expT_MeV,expV_MeV");
    EXPECT_EQ(lines.size(), 1u + 4u * 2001u);
}

TEST(Adiabatic, SingleStepDoesNotCrash) {
    const auto r = run_cli({"adiabatic", "--steps", "1", "--evolvers", "brgc"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("deviation_MeV"), std::string::npos);
}

TEST(Adiabatic, IncompatibleEvolverExitsTwo) {
    EXPECT_EQ(run_cli({"adiabatic", "--n", "1", "--evolvers", "brgc"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"adiabatic", "--evolvers", "magic"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"adiabatic", "--steps", "0"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"adiabatic", "--ramp", "cubic"}).code, kExitUsage);
}

TEST(Adiabatic, ConfigSidecar) {
    const auto path = (temp_dir() / "trace.csv").string();
    ASSERT_EQ(run_cli({"adiabatic", "--steps", "10", "--out", path}).code, kExitOk);
    const auto cfg = json::parse(slurp(path + ".config.json"));
    EXPECT_EQ(cfg.at("config").at("steps"), 10);
    EXPECT_EQ(cfg.at("config").at("ramp"), "nested-sin2");
}

TEST(HoScan, QuotedValues) {
    const auto r = run_cli({"ho-scan", "--lambdas", "10,100,1000"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto lines = data_lines(r.out);
    ASSERT_EQ(lines.size(), 4u);
    const double expected[] = {11.1, 176.1, 1944.3};
    double prev = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        const double v = std::stod(split(lines[i + 1])[1]);
        EXPECT_NEAR(v, expected[i], 0.01 * expected[i]);
        EXPECT_GT(v, prev);
        prev = v;
    }
}

TEST(HoScan, EdgeCases) {
    const auto r = run_cli({"ho-scan", "--lambdas", "2"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_EQ(data_lines(r.out).size(), 2u);
    EXPECT_EQ(run_cli({"ho-scan", "--lambdas", "1"}).code, kExitUsage);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli({}).code, kExitUsage);
    EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"trotter-sweep", "--bogus"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

TEST(Cli, DeterministicPayload) {
    const std::vector<std::string> args{"trotter-sweep", "--code", "binary", "--n-min", "3", "--n-max", "5"};
    EXPECT_EQ(run_cli(args).out, run_cli(args).out);
    const std::vector<std::string> adia{"adiabatic", "--steps", "50"};
    EXPECT_EQ(run_cli(adia).out, run_cli(adia).out);
}

TEST(Cli, ExecutableExitCodes) {
    const std::string exe = GRAYLAP_CLI_PATH;
    auto status = [&](const std::string &args) {
        const int raw = std::system((exe + " " + args + " >/dev/null 2>&1").c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    EXPECT_EQ(status("ho-scan --lambdas 10"), 0);
    EXPECT_EQ(status("ho-scan --lambdas 1"), 2);
    EXPECT_EQ(status("no-such-command"), 2);
    EXPECT_EQ(status("build-circuit --encoding brgc --n 5 --out /nonexistent-dir/x.json"), 2);
}

TEST(Cli, ThreadCapFromEnvironment) {
    ::setenv("GRAYLAP_THREADS", "1", 1);
    const auto a = run_cli({"trotter-sweep", "--n-min", "3", "--n-max", "4"});
    ::setenv("GRAYLAP_THREADS", "4", 1);
    const auto b = run_cli({"trotter-sweep", "--n-min", "3", "--n-max", "4"});
    ::unsetenv("GRAYLAP_THREADS");
    ASSERT_EQ(a.code, kExitOk);
    EXPECT_EQ(a.out, b.out);
}

} // namespace
} // namespace graylap::cli
