// Copyright 2026 The qsearch Authors
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

#include "qsearch/cli.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

using namespace qsearch;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "qsearch");
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("qsearch_cli_test_" + name);
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(cli, tstar_farhi_gutmann) {
    Result r = run({"tstar", "--alpha", "1", "--delta", "1", "--beta-re", "0", "--beta-im", "0", "--x", "0.5"});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(r.out, "0.5\n");
    EXPECT_EQ(r.err, "");
}

TEST(cli, threshold_reachable_and_not) {
    Result r = run({"threshold", "--alpha", "0.5", "--delta", "1", "--beta-re", "1", "--x", "0.5", "--p", "0.95"});
    ASSERT_EQ(r.code, cli::kExitOk);
    EXPECT_NEAR(std::stod(r.out), 0.1579, 2e-3);

    Result u = run({"threshold", "--alpha", "0.5", "--delta", "1", "--beta-re", "1", "--x", "0.5", "--p", "0.99"});
    EXPECT_EQ(u.code, cli::kExitUnreachable);
    EXPECT_EQ(u.out, "");
    EXPECT_NE(u.err.find("unreachable"), std::string::npos);

    EXPECT_EQ(run({"threshold", "--alpha", "1", "--p", "1.5"}).code, cli::kExitValidation);
}

TEST(cli, validation_errors) {
    for (const auto &args : std::vector<std::vector<std::string>>{
             {"eval", "--t", "1", "--x", "1"},
             {"eval", "--t", "1", "--x", "0"},
             {"eval", "--t", "-1"},
             {"eval", "--t", "1", "--energy", "0"},
             {"eval", "--t", "1", "--beta-re", "1", "--beta-im", "1", "--gamma-re", "1", "--gamma-im", "1"},
             {"eval", "--t", "1", "--alpha", "nan"},
             {"eval", "--t", "1", "--alpha", "abc"},
             {"eval"},
             {"eval", "--t", "1", "--bogus", "2"},
             {"pmax", "--format", "xml"},
             {"grover", "--n", "1"},
             {"prior", "--xbar", "2", "--n", "4"},
             {"nosuch"},
             {},
         }) {
        Result r = run(args);
        EXPECT_EQ(r.code, cli::kExitValidation) << (args.empty() ? "" : args[0]);
        EXPECT_FALSE(r.err.empty());
        EXPECT_EQ(r.out, "");
    }
    Result ok = run({"eval", "--t", "1", "--beta-re", "1", "--beta-im", "1", "--gamma-re", "1", "--gamma-im", "-1"});
    EXPECT_EQ(ok.code, cli::kExitOk);
}

TEST(cli, quadrature_failure_exit_code) {
    // A vanishingly narrow prior leaves nothing to normalize.
    Result r = run({"prior", "--xbar", "0.5", "--n", "4", "--mu", "0.3", "--sigma-sq", "1e-300"});
    EXPECT_EQ(r.code, cli::kExitQuadrature);
    EXPECT_FALSE(r.err.empty());
}

TEST(cli, scalar_commands) {
    EXPECT_EQ(run({"classify", "--alpha", "1", "--delta", "2", "--beta-re", "1", "--beta-im", "1"}).out, "General\n");
    EXPECT_EQ(run({"pmax", "--alpha", "1", "--delta", "0.5", "--x", "0.5"}).out, "0.75\n");
    EXPECT_EQ(run({"pmax", "--beta-im", "1", "--x", "0.5"}).out, "0.75\n");
    EXPECT_EQ(run({"pmax", "--exact", "--beta-im", "1", "--x", "0.5"}).out, "1\n");
    EXPECT_EQ(run({"tstar"}).out, "none\n");
    EXPECT_EQ(run({"eval", "--alpha", "1", "--delta", "1", "--t", "0"}).out, "0.25\n");
    EXPECT_NEAR(std::stod(run({"eval", "--alpha", "1", "--delta", "1", "--t", "0.5", "--oracle"}).out), 1.0, 1e-8);
    EXPECT_EQ(run({"grover", "--n", "4"}).out, "1 1\n");
    EXPECT_EQ(run({"grover", "--n", "4", "--k", "0"}).out, "0 0.25\n");
    EXPECT_EQ(run({"fg", "--t", "0.5", "--x", "0.5"}).out, "1\n");
    EXPECT_NEAR(std::stod(run({"prior", "--xbar", "0.923879532511287", "--n", "4", "--sigma-sq", "1"}).out), 0.1455,
                0.03 * 0.1455);
    EXPECT_NEAR(std::stod(run({"prior", "--xbar", "0.923879532511287", "--n", "16", "--uniform"}).out), 1.79e-14,
                0.02 * 1.79e-14);
}

TEST(cli, curve_table) {
    Result r = run({"curve", "--alpha", "1", "--delta", "1", "--t-end", "0.5", "--n", "3", "--format", "tsv"});
    ASSERT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(r.out.substr(0, 4), "t\tp\n");
    EXPECT_NE(r.out.find("\n0.00000000000e+00\t2.50000000000e-01\n"), std::string::npos);
    EXPECT_NE(r.out.find("\n5.00000000000e-01\t1.00000000000e+00\n"), std::string::npos);
    EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(cli, config_file_with_flag_override) {
    auto cfg = temp_path("config.ini");
    {
        std::ofstream f(cfg);
        f << "# unit-probability family\nalpha = 1\ndelta = 1\nbeta-re = 1\nx = 0.5\n";
    }
    EXPECT_EQ(run({"tstar", "--config", cfg.string()}).out, "0.166666666667\n");
    EXPECT_EQ(run({"tstar", "--config=" + cfg.string(), "--alpha", "0.5", "--delta", "0.5"}).out, "0.2\n");
    EXPECT_EQ(run({"tstar", "--alpha", "0.5", "--delta", "0.5", "--config", cfg.string()}).out, "0.2\n");

    {
        std::ofstream f(cfg);
        f << "exact = true\nbeta-im = 1\n";
    }
    EXPECT_EQ(run({"pmax", "--config", cfg.string()}).out, "1\n");

    {
        std::ofstream f(cfg);
        f << "nonsense = 3\n";
    }
    EXPECT_EQ(run({"tstar", "--config", cfg.string()}).code, cli::kExitValidation);
    EXPECT_EQ(run({"tstar", "--config", temp_path("missing.ini").string()}).code, cli::kExitValidation);
    std::filesystem::remove(cfg);
}

TEST(cli, table_output_file_is_deterministic) {
    auto a = temp_path("t1.csv");
    auto b = temp_path("t2.csv");
    for (const char *cmd : {"table1", "table2", "table3", "fig4", "fig5", "fig6"}) {
        ASSERT_EQ(run({cmd, "--out", a.string()}).code, cli::kExitOk);
        ASSERT_EQ(run({cmd, "--out", b.string()}).code, cli::kExitOk);
        std::string first = slurp(a);
        ASSERT_FALSE(first.empty());
        EXPECT_EQ(first, slurp(b)) << cmd;
        EXPECT_EQ(first, run({cmd}).out) << cmd;
    }
    std::filesystem::remove(a);
    std::filesystem::remove(b);
    EXPECT_EQ(run({"table2", "--out", "/nonexistent-dir/x.csv"}).code, cli::kExitValidation);
}

TEST(cli, help) {
    Result r = run({"--help"});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_NE(r.out.find("threshold"), std::string::npos);
    Result s = run({"threshold", "--help"});
    EXPECT_EQ(s.code, cli::kExitOk);
    EXPECT_NE(s.out.find("--p"), std::string::npos);
}
