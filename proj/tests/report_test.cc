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

#include "hgsa/report.h"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "test_util.h"

using namespace hgsa;

TEST(report, fnv1a_reference_values) {
    EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ull);
    EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cull);
}

TEST(report, checksum_is_sixteen_hex_digits) {
    std::string c = file_checksum(testutil::fixture("h2_0.74.ham"));
    EXPECT_EQ(c.size(), 16u);
    EXPECT_EQ(c.find_first_not_of("0123456789abcdef"), std::string::npos);
    EXPECT_EQ(c, file_checksum(testutil::fixture("h2_0.74.ham")));
    EXPECT_NE(c, file_checksum(testutil::fixture("h2_1.ham")));
}

TEST(report, group_order_names) {
    EXPECT_EQ(group_order_from_string("asc"), GroupOrder::Ascending);
    EXPECT_STREQ(to_string(GroupOrder::Descending), "desc");
    EXPECT_THROW(group_order_from_string("random"), std::invalid_argument);
}

TEST(report, provenance_fields) {
    RunConfig config;
    config.command = "vqe";
    config.inputs = {testutil::fixture("h2_0.74.ham").string()};
    config.seeds = {0, 1};
    nlohmann::json p = provenance(config);
    EXPECT_EQ(p["schema"], SCHEMA_VERSION);
    EXPECT_TRUE(p["version"].is_string());
    EXPECT_EQ(p["config"]["command"], "vqe");
    EXPECT_EQ(p["config"]["seeds"].size(), 2u);
    EXPECT_EQ(p["config"]["gradient"], "adjoint");
    ASSERT_EQ(p["inputs"].size(), 1u);
    EXPECT_EQ(p["inputs"][0]["checksum"].get<std::string>().size(), 16u);
}

TEST(report, config_validation) {
    RunConfig config;
    config.command = "vqe";
    config.seeds = {0};
    config.layers = 0;
    EXPECT_THROW(config.validate(), std::invalid_argument);
}

TEST(report, empty_counts_table_is_header_only) {
    EXPECT_EQ(counts_csv({}), "molecule,num_qubits,num_electrons,ansatz,two_qubit_gates,parameters_all_free,"
                              "parameters_gamma_only\n");
    EXPECT_EQ(trace_csv({}), "seed,iteration,energy,grad_norm\n");
}

TEST(report, counts_csv_rows) {
    std::string csv = counts_csv({count_all(testutil::load_fixture("h2_0.74.ham"))});
    size_t lines = 0;
    std::istringstream in(csv);
    for (std::string line; std::getline(in, line);) {
        ++lines;
    }
    EXPECT_EQ(lines, 5u);
    EXPECT_NE(csv.find(",H-GSA,"), std::string::npos);
}

TEST(report, trace_csv_includes_initial_point) {
    QubitHamiltonian h = testutil::load_fixture("h2_0.74.ham");
    AnsatzPlan plan = build_ansatz(h);
    SeedResult r{run_vqe(plan, h, 0), 0};
    std::string csv = trace_csv({r});
    size_t lines = 0;
    std::istringstream in(csv);
    for (std::string line; std::getline(in, line);) {
        ++lines;
    }
    EXPECT_EQ(lines, r.run.trace.entries.size() + 2);
    EXPECT_NE(csv.find("\n0,0,"), std::string::npos);
}

TEST(report, synth_json_reports_verification) {
    AnsatzPlan plan = build_ansatz(testutil::load_fixture("lih_1.6.ham"));
    nlohmann::json j = synth_json(plan);
    EXPECT_TRUE(j["all_verified"].get<bool>());
    EXPECT_EQ(j["blocks"].size(), plan.blocks.size());
}

TEST(report, write_atomic_replaces_content) {
    auto path = std::filesystem::temp_directory_path() / "hgsa_report_test.txt";
    write_atomic(path, "first");
    write_atomic(path, "second");
    std::ifstream in(path);
    std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_EQ(s, "second");
    std::filesystem::remove(path);
}
