// Copyright 2026 The monomat Authors
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

#include "monomat/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

using namespace monomat;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string &name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path);
    out << text;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(cli, version_and_help) {
    CliResult v = run({"--version"});
    ASSERT_EQ(v.code, 0);
    ASSERT_EQ(v.out, version_string() + "\n");
    ASSERT_EQ(run({"--help"}).code, 0);
    ASSERT_EQ(run({}).code, kExitParseFailure);
}

TEST(cli, parse_failures) {
    ASSERT_EQ(run({"no-such-command"}).code, kExitParseFailure);
    ASSERT_EQ(run({"verify", "--mode", "sideways"}).code, kExitParseFailure);
    ASSERT_EQ(run({"verify", "--k", "0"}).code, kExitParseFailure);
    ASSERT_EQ(run({"haar", "--word", "AA"}).code, kExitParseFailure);
    ASSERT_EQ(run({"verify", "--poly", "a1 + x2"}).code, kExitParseFailure);
    ASSERT_EQ(run({"verify", "--spec", "/nonexistent/spec.json"}).code, kExitParseFailure);
    ASSERT_EQ(run({"model", "--state", "partial:x"}).code, kExitParseFailure);
    ASSERT_EQ(run({"tables", "--format", "xml"}).code, kExitParseFailure);

    auto bad = temp_path("monomat_cli_bad.json");
    write_file(bad, "{\"n\": 3,");
    CliResult r = run({"verify", "--spec", bad});
    ASSERT_EQ(r.code, kExitParseFailure);
    ASSERT_FALSE(r.err.empty());
    std::filesystem::remove(bad);
}

TEST(cli, example) {
    CliResult r = run({"example"});
    ASSERT_EQ(r.code, 0) << r.err;
    ASSERT_EQ(r.out.substr(0, r.out.find('\n')), "matrix,index,eigenvalue");
    CliResult j = run({"example", "--format", "json", "--a-diag", "0.5,0.25", "--n", "3"});
    ASSERT_EQ(j.code, 0) << j.err;
    auto doc = nlohmann::json::parse(j.out);
    ASSERT_EQ(doc["rows"].size(), 2u * 2u * 3u);
}

TEST(cli, tables) {
    CliResult r = run({"tables", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    ASSERT_EQ(doc["rows"].size(), 32u);
    for (const auto &row : doc["rows"]) {
        ASSERT_EQ(row["sign"], row["expected"]);
    }
}

TEST(cli, verify_modes) {
    for (const char *mode : {"cyclic", "monotone", "quotient"}) {
        CliResult r = run({"verify", "--mode", mode, "--k", "4", "--format", "json"});
        ASSERT_EQ(r.code, 0) << mode << r.err;
        auto doc = nlohmann::json::parse(r.out);
        ASSERT_EQ(doc["rows"].size(), 4u);
        for (const auto &row : doc["rows"]) {
            ASSERT_EQ(row["pass"], true);
        }
    }
    ASSERT_EQ(run({"verify-cyclic", "--k", "2"}).out, run({"verify", "--mode", "cyclic", "--k", "2"}).out);
    ASSERT_EQ(run({"verify-monotone", "--k", "2"}).code, 0);
}

TEST(cli, verify_detects_wrong_moments) {
    // Orthonormal tau does not describe the tensor model's b.
    auto path = temp_path("monomat_cli_moments.json");
    write_file(path, R"({"eigenvalues": [0.5, 0.25, 0.125], "tau": {"1": 0.3, "11": 1}})");
    CliResult r = run({"verify", "--moments", path, "--k", "3"});
    ASSERT_EQ(r.code, kExitAssertionFailed);
    std::filesystem::remove(path);
}

TEST(cli, model) {
    CliResult r = run({"model", "--state", "monotone", "--k", "2", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    ASSERT_NEAR(doc["rows"][0]["value"][0].get<double>(), 21.0 / 64, 1e-12);
}

TEST(cli, limits) {
    CliResult r = run({"limits", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    ASSERT_NEAR(doc["summary"]["cyclic_limit"][0].get<double>(), 21.0 / 32, 1e-12);
    ASSERT_NEAR(doc["summary"]["monotone_limit"][0].get<double>(), 21.0 / 64, 1e-12);
}

TEST(cli, haar_output_is_reproducible) {
    std::vector<std::string> args{"haar", "--n", "8,16,32", "--trials", "20", "--seed", "4"};
    CliResult a = run(args);
    ASSERT_TRUE(a.code == 0 || a.code == kExitAssertionFailed) << a.err;
    auto threaded = args;
    threaded.push_back("--threads");
    threaded.push_back("2");
    CliResult b = run(threaded);
    ASSERT_EQ(a.out, b.out);
    ASSERT_EQ(a.out.substr(0, a.out.find('\n')), "n,l,mean_re,mean_im,stderr,target_re,target_im,abs_err");

    auto out_path = temp_path("monomat_cli_haar.csv");
    auto summary_path = temp_path("monomat_cli_haar.json");
    auto with_files = args;
    for (const auto &s : {std::string("--output"), out_path, std::string("--summary"), summary_path}) {
        with_files.push_back(s);
    }
    CliResult c = run(with_files);
    ASSERT_TRUE(c.out.empty());
    ASSERT_EQ(read_file(out_path), a.out);
    auto summary = nlohmann::json::parse(read_file(summary_path));
    ASSERT_TRUE(summary["rate_fit"].contains("slope"));
    std::filesystem::remove(out_path);
    std::filesystem::remove(summary_path);
}

TEST(cli, haar_negative_control_fails) {
    CliResult r = run({"haar", "--n", "8,16,32", "--trials", "4", "--identity-unitary"});
    ASSERT_EQ(r.code, kExitAssertionFailed);
}

TEST(cli, haar_bound_violation_is_an_assertion_failure) {
    auto path = temp_path("monomat_cli_family.json");
    write_file(path, R"({"a": [{"diag": [1, 1]}], "bound": 0.5})");
    CliResult r = run({"haar", "--n", "4", "--trials", "2", "--family", path});
    ASSERT_EQ(r.code, kExitAssertionFailed);
    std::filesystem::remove(path);
}
