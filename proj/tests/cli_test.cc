// Copyright 2026 The hgsa Authors
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>

#include "test_util.h"

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
    std::string cmd = std::string(HGSA_CLI) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / ("hgsa_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string fixture_arg(const std::string& name) {
    return hgsa::testutil::fixture(name).string();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(cli, malformed_input_exits_two) {
    EXPECT_EQ(run("partition -i " + fixture_arg("synthetic/malformed.ham") + " -o " + scratch("bad").string()), 2);
}

TEST(cli, missing_input_exits_two) {
    EXPECT_EQ(run("fci -i /nonexistent/none.ham"), 2);
}

TEST(cli, unknown_option_exits_two) {
    EXPECT_EQ(run("vqe -i " + fixture_arg("h2_0.74.ham") + " --gradient shift"), 2);
}

TEST(cli, tampered_synthesis_fails) {
    EXPECT_EQ(run("synth --tamper -i " + fixture_arg("h2_0.74.ham") + " -o " + scratch("tamper").string()), 1);
}

TEST(cli, h2_partition_synth_fci) {
    fs::path dir = scratch("h2");
    std::string in = fixture_arg("h2_0.74.ham");
    ASSERT_EQ(run("partition -i " + in + " -o " + dir.string()), 0);
    ASSERT_EQ(run("synth -i " + in + " -o " + dir.string()), 0);
    ASSERT_EQ(run("fci -i " + in + " -o " + dir.string()), 0);
    auto groups = nlohmann::json::parse(slurp(dir / "groups.json"));
    EXPECT_TRUE(groups["result"]["passed"].get<bool>());
    EXPECT_EQ(groups["result"]["groups"].size(), 2u);
    auto circuits = nlohmann::json::parse(slurp(dir / "circuits.json"));
    EXPECT_TRUE(circuits["result"]["all_verified"].get<bool>());
    EXPECT_EQ(circuits["schema"], 1);
    EXPECT_TRUE(fs::exists(dir / "fci.json"));
}

TEST(cli, vqe_rerun_is_reproducible) {
    fs::path a = scratch("vqe_a");
    fs::path b = scratch("vqe_b");
    std::string args = "vqe -i " + fixture_arg("h2_0.74.ham") + " --seeds 0,1 --jobs 2 -o ";
    ASSERT_EQ(run(args + a.string()), 0);
    ASSERT_EQ(run(args + b.string()), 0);
    auto strip = [](nlohmann::json j) {
        j["config"].erase("out");
        for (auto& r : j["result"]["runs"]) {
            r.erase("wall_seconds");
        }
        return j;
    };
    auto ja = strip(nlohmann::json::parse(slurp(a / "result.json")));
    auto jb = strip(nlohmann::json::parse(slurp(b / "result.json")));
    EXPECT_EQ(ja, jb);
    EXPECT_EQ(slurp(a / "trace.csv"), slurp(b / "trace.csv"));
    EXPECT_LE(ja["result"]["summary"]["max_error"].get<double>(), 1e-3);
}

TEST(cli, counts_without_inputs_is_header_only) {
    fs::path dir = scratch("counts");
    ASSERT_EQ(run("counts -o " + dir.string()), 0);
    std::string csv = slurp(dir / "counts.csv");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1);
}
