// Copyright 2026 The sqir Authors
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

#include "cli.h"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace sqir::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("sqir_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& body) {
        const fs::path p = dir_ / name;
        std::ofstream(p) << body;
        return p.string();
    }

    fs::path dir_;
};

TEST_F(CliTest, GhzAmplitudes) {
    const Result r = run({"algo", "ghz", "--n", "3"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["amplitudes"].size(), 2u);
    EXPECT_NEAR(j["amplitudes"]["000"][0].get<double>(), 1 / std::sqrt(2.0), 1e-11);
    EXPECT_NEAR(j["amplitudes"]["111"][0].get<double>(), 1 / std::sqrt(2.0), 1e-11);
}

TEST_F(CliTest, CheckGroverPasses) {
    const Result r = run({"check", "grover", "--n", "3", "--k", "1", "--i-max", "6"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["theorem"], "grover");
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_EQ(j["points"].size(), 7u);
}

TEST_F(CliTest, CheckDeterministicIsByteStable) {
    const Result a = run({"check", "simon", "--seed", "5", "--deterministic"});
    const Result b = run({"check", "simon", "--seed", "5", "--deterministic"});
    EXPECT_EQ(a.code, kExitOk);
    EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, CheckUnknownTheoremIsUsageError) {
    EXPECT_EQ(run({"check", "nope"}).code, kExitUsage);
}

TEST_F(CliTest, CheckListNamesEveryTheorem) {
    const Result r = run({"check", "--list"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("qpe_general"), std::string::npos);
}

TEST_F(CliTest, TypecheckOutOfRangeQubit) {
    const Result r = run({"typecheck", write("bad.qc", "qubits 3\nh 0\nx 5\n")});
    EXPECT_EQ(r.code, kExitFailure);
    const json j = json::parse(r.out);
    EXPECT_FALSE(j["well_typed"].get<bool>());
    EXPECT_EQ(j["line"], 3);
    EXPECT_EQ(run({"typecheck", write("ok.qc", "qubits 3\nh 0\nx 2\n")}).code, kExitOk);
}

TEST_F(CliTest, ParseErrorIsUsageAndCitesLine) {
    const Result r = run({"run", write("bad.qc", "qubits 1\nfoo 0\n")});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST_F(CliTest, RunIllTypedCitesStatement) {
    const Result r = run({"run", write("bad.qc", "qubits 2\nh 0\ncnot 1 1\n")});
    EXPECT_EQ(r.code, kExitFailure);
    EXPECT_NE(r.err.find("line 3"), std::string::npos);
}

TEST_F(CliTest, RunVectorAndState) {
    const std::string path = write("bell.qc", "qubits 2\nh 0\ncnot 0 1\n");
    const json j = json::parse(run({"run", path}).out);
    EXPECT_EQ(j["semantics"], "vector");
    EXPECT_NEAR(j["probabilities"]["00"].get<double>(), 0.5, 1e-12);
    EXPECT_NEAR(j["probabilities"]["11"].get<double>(), 0.5, 1e-12);
    const json flipped = json::parse(run({"run", path, "--state", "10"}).out);
    EXPECT_NEAR(flipped["amplitudes"]["11"][0].get<double>(), -1 / std::sqrt(2.0), 1e-11);
    EXPECT_EQ(run({"run", path, "--state", "1"}).code, kExitUsage);
    EXPECT_EQ(run({"run", path, "--state", "1x"}).code, kExitUsage);
}

TEST_F(CliTest, RunCoinAllSemantics) {
    const std::string path = write("coin.qc", "qubits 1\nh 0\nmeas 0 { } { }\n");
    const json nd = json::parse(run({"run", path}).out);
    EXPECT_EQ(nd["semantics"], "nondet");
    ASSERT_EQ(nd["outcomes"].size(), 2u);
    EXPECT_NEAR(nd["outcomes"][0]["probability"].get<double>(), 0.5, 1e-12);
    const json dm = json::parse(run({"run", path, "--semantics", "density"}).out);
    EXPECT_NEAR(dm["probabilities"]["0"].get<double>(), 0.5, 1e-12);
    EXPECT_NEAR(dm["trace"].get<double>(), 1.0, 1e-12);
    EXPECT_EQ(run({"run", path, "--semantics", "vector"}).code, kExitUsage);
    EXPECT_EQ(run({"run", path, "--semantics", "quantum"}).code, kExitUsage);
}

TEST_F(CliTest, DenoteLimits) {
    const json j = json::parse(run({"denote", write("h.qc", "qubits 1\nh 0\n")}).out);
    EXPECT_EQ(j["matrix"].size(), 2u);
    EXPECT_NEAR(j["matrix"][1][1][0].get<double>(), -1 / std::sqrt(2.0), 1e-11);
    EXPECT_EQ(run({"denote", write("big.qc", "qubits 7\nh 0\n")}).code, kExitUsage);
    EXPECT_EQ(run({"denote", write("m.qc", "qubits 1\nmeas 0 { } { }\n")}).code, kExitUsage);
}

TEST_F(CliTest, ExportQasm) {
    const Result r = run({"export-qasm", write("bell.qc", "qubits 2\nh 0\ncnot 0 1\n")});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out.rfind("OPENQASM 2.0;", 0), 0u);
    EXPECT_NE(r.out.find("CX q[0],q[1];"), std::string::npos);
    EXPECT_EQ(run({"export-qasm", write("bad.qc", "qubits 1\nx 4\n")}).code, kExitFailure);
    EXPECT_EQ(run({"export-qasm", write("br.qc", "qubits 1\nmeas 0 { } { x 0 }\n")}).code, kExitFailure);
}

TEST_F(CliTest, AlgorithmsRun) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"algo", "superdense", "--b1", "1", "--b2", "0"},
             {"algo", "teleport"},
             {"algo", "dj", "--n", "3", "--f", "constant1"},
             {"algo", "simon", "--n", "3", "--s", "5"},
             {"algo", "grover", "--n", "3"},
             {"algo", "qft", "--n", "2", "--x", "1"},
             {"algo", "qpe", "--k", "3", "--z", "5"}}) {
        const Result r = run(args);
        EXPECT_EQ(r.code, kExitOk) << args[1] << ": " << r.err;
        EXPECT_NO_THROW((void)json::parse(r.out)) << args[1];
    }
    EXPECT_EQ(json::parse(run({"algo", "superdense", "--b1", "1", "--b2", "0"}).out)["decoded"], "10");
    EXPECT_EQ(json::parse(run({"algo", "qpe", "--k", "3", "--z", "5"}).out)["estimate"], "101");
    EXPECT_EQ(json::parse(run({"algo", "dj", "--n", "3", "--f", "constant1"}).out)["verdict"], "constant");
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"bogus"}).code, kExitUsage);
    EXPECT_EQ(run({"algo", "shor"}).code, kExitUsage);
    EXPECT_EQ(run({"algo", "grover", "--n", "1"}).code, kExitUsage);
    EXPECT_EQ(run({"run", (dir_ / "missing.qc").string()}).code, kExitUsage);
    EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST_F(CliTest, HelpDocumentsBitOrder) {
    const Result r = run({"--help"});
    EXPECT_NE((r.out + r.err).find("qubit 0 first (most significant)"), std::string::npos);
}

TEST_F(CliTest, PrettyOutputIsHumanReadable) {
    const Result r = run({"--pretty", "algo", "ghz", "--n", "2"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find('\n'), r.out.size() - 1);
}

}  // namespace
}  // namespace sqir::cli
