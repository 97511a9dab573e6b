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

#pragma once

#include <cstdint>
#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "hgsa/ansatz.h"
#include "hgsa/baselines.h"
#include "hgsa/grouping.h"
#include "hgsa/vqe.h"

namespace hgsa {

/// Bumped whenever a field of an emitted JSON document changes meaning.
constexpr int SCHEMA_VERSION = 1;

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    std::vector<uint64_t> seeds;
    size_t layers = 1;
    size_t max_iter = 200;
    GroupOrder order = GroupOrder::Descending;
    std::string out_dir = ".";
    GradientMethod gradient = GradientMethod::Adjoint;
    size_t jobs = 1;
    double gtol = 1e-6;
    double ftol = 1e-10;

    /// Throws std::invalid_argument on an inconsistent configuration.
    void validate() const;
    nlohmann::json to_json() const;
};

const char* to_string(GroupOrder order);
/// "desc" or "asc".
GroupOrder group_order_from_string(const std::string& name);

/// 64-bit FNV-1a.
uint64_t fnv1a64(std::string_view data);
/// fnv1a64 of the file contents as 16 lowercase hex digits.
std::string file_checksum(const std::filesystem::path& path);

/// {"schema", "version", "config", "inputs": [{"path", "checksum"}]}.
nlohmann::json provenance(const RunConfig& config);

nlohmann::json circuit_json(const Circuit& c);
nlohmann::json partition_json(const GroupedHamiltonian& gh, const PartitionReport& report);
/// Per block: adjacency, local ops, U_z gate list, generators and the
/// diagonalization flag.
nlohmann::json synth_json(const AnsatzPlan& plan);

struct SeedResult {
    VqeRun run;
    double error = 0;
};
nlohmann::json vqe_json(const QubitHamiltonian& h, double fci, const AnsatzPlan& plan,
                        const std::vector<SeedResult>& results);
/// seed,iteration,energy,grad_norm with iteration 0 the starting point.
std::string trace_csv(const std::vector<SeedResult>& results);

std::string counts_csv(const std::vector<CountReport>& reports);
nlohmann::json counts_json(const std::vector<CountReport>& reports);

/// Writes through a temporary file and a rename.
void write_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace hgsa
