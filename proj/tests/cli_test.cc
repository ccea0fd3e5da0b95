// Copyright 2026 The majent Authors
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

#include "majent/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "majent/detectors.hpp"
#include "majent/state_io.hpp"

namespace majent::cli {
namespace {

const std::filesystem::path kData = MAJENT_TEST_DATA_DIR;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "majent");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (kData / name).string(); }

TEST(CliTest, Theorem1BellOnWerner) {
    const auto r = invoke({"detect", "--detector", "t1", "--measurement", "bell", "--werner", "d=2,q=0.5"});
    EXPECT_EQ(r.code, kEntangled);
    EXPECT_NE(r.out.find("violated at index 1, margin 0.125"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("lhs: 0.625 0.125 0.125 0.125"), std::string::npos);
    EXPECT_EQ(invoke({"detect", "--detector", "t1", "--werner", "d=2,q=0.3"}).code, kInconclusive);
}

TEST(CliTest, WernerShorthand) {
    EXPECT_EQ(invoke({"detect", "--detector", "t3", "--werner", "3,0.5"}).code, kEntangled);
}

TEST(CliTest, Theorem3ProductStateFile) {
    const auto r = invoke({"detect", "--detector", "t3", "--state", data("product_state.json")});
    EXPECT_EQ(r.code, kInconclusive) << r.err;
    EXPECT_NE(r.out.find("verdict: Inconclusive"), std::string::npos);
}

TEST(CliTest, Theorem2AndCorollaries) {
    EXPECT_EQ(invoke({"detect", "--detector", "t2", "--werner", "d=2,q=0.6"}).code, kEntangled);
    EXPECT_EQ(invoke({"detect", "--detector", "t2", "--werner", "d=2,q=0.5"}).code, kInconclusive);
    EXPECT_EQ(invoke({"detect", "--detector", "c1:tsallis:inf", "--werner", "d=2,q=0.5"}).code, kEntangled);
    EXPECT_EQ(invoke({"detect", "--detector", "c1:shannon", "--werner", "d=2,q=0.34"}).code, kInconclusive);
    EXPECT_EQ(invoke({"detect", "--detector", "c2:shannon", "--werner", "d=2,q=0.95"}).code, kEntangled);
    EXPECT_EQ(invoke({"detect", "--detector", "c3:renyi:2", "--state", data("bell_state.json")}).code, kEntangled);
}

TEST(CliTest, OptimizerBoundedMeasurements) {
    const auto eig = invoke({"detect", "--detector", "t1", "--measurement", "eigenbasis", "--werner", "d=2,q=0.5",
                             "--restarts", "8"});
    EXPECT_EQ(eig.code, kEntangled) << eig.err;
    EXPECT_NE(eig.out.find("bound: optimizer"), std::string::npos);
    const auto file = invoke({"detect", "--detector", "t1", "--measurement", "file", "--measurement-file",
                              data("sigma_y_povm.json"), "--werner", "d=2,q=0.5"});
    EXPECT_EQ(file.code, kUsageError);  // a qubit measurement on a two-qubit state
}

TEST(CliTest, ExitCodes) {
    EXPECT_EQ(invoke({"detect", "--detector", "t3", "--state", data("malformed.json")}).code, kInputError);
    EXPECT_EQ(invoke({"detect", "--detector", "t3", "--state", data("negative_state.json")}).code, kInputError);
    EXPECT_EQ(invoke({"detect", "--detector", "t3", "--state", data("missing.json")}).code, kInputError);
    EXPECT_EQ(invoke({"detect", "--detector", "t3", "--bogus"}).code, kUsageError);
    EXPECT_EQ(invoke({"detect", "--detector", "t9", "--werner", "d=2,q=0.5"}).code, kUsageError);
    EXPECT_EQ(invoke({"detect", "--detector", "c1:gini", "--werner", "d=2,q=0.5"}).code, kUsageError);
    EXPECT_EQ(invoke({"detect", "--detector", "t3"}).code, kUsageError);
    EXPECT_EQ(invoke({"detect", "--detector", "t2", "--werner", "d=3,q=0.5"}).code, kUsageError);
    EXPECT_EQ(invoke({"detect", "--detector", "t1", "--werner", "d=2,q=2"}).code, kUsageError);
    EXPECT_EQ(invoke({}).code, kUsageError);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(CliTest, WernerScanCsv) {
    const auto r = invoke({"werner-scan", "--d", "2..8", "--orders", "1,2,5,inf"});
    EXPECT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "d,order,q_star,method");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        if (line.find(",inf,") != std::string::npos) {
            const int d = std::stoi(line.substr(0, line.find(',')));
            const double q = std::stod(line.substr(line.find(",inf,") + 5));
            EXPECT_NEAR(q, 1.0 / (1 + d), 1e-12);
        }
    }
    EXPECT_EQ(rows, 28);
    EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(CliTest, OutFile) {
    const auto path = std::filesystem::temp_directory_path() / "majent_cli_scan.csv";
    const auto r = invoke({"werner-scan", "--d", "2", "--orders", "inf", "--out", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream contents;
    contents << in.rdbuf();
    EXPECT_EQ(contents.str(), "d,order,q_star,method\n2,inf,0.333333333333,analytic\n");
    std::filesystem::remove(path);
}

TEST(CliTest, Deterministic) {
    const std::vector<std::string> args{"bound", "--measurement", "pauli3", "--restarts", "8", "--seed", "5"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("bound: 0.490562"), std::string::npos) << a.out;
}

TEST(CliTest, SeparableBellBound) {
    const auto r = invoke({"bound", "--measurement", "bell", "--d", "2", "--separable", "--restarts", "8"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("bound: 0.5 0.5 0 0"), std::string::npos) << r.out;
}

TEST(CliTest, SpectrumEstimate) {
    const auto r = invoke({"spectrum-estimate", "--werner", "d=2,q=0.5", "--restarts", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("estimate: 0.625 0.125 0.125 0.125"), std::string::npos) << r.out;
}

TEST(CliTest, StateFileMatchesGenerator) {
    const auto path = std::filesystem::temp_directory_path() / "majent_cli_werner.json";
    save_state(werner(3, 0.3), path);
    const auto from_file = invoke({"detect", "--detector", "t1", "--state", path.string()});
    const auto generated = invoke({"detect", "--detector", "t1", "--werner", "d=3,q=0.3"});
    EXPECT_EQ(from_file.code, generated.code);
    EXPECT_EQ(from_file.out, generated.out);
    std::filesystem::remove(path);
}

}  // namespace
}  // namespace majent::cli
