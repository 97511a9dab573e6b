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

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hgsa/version.h"

namespace hgsa {

using nlohmann::json;

void RunConfig::validate() const {
    if (command.empty()) {
        throw std::invalid_argument("missing command");
    }
    if (layers < 1) {
        throw std::invalid_argument("--layers must be at least 1");
    }
    if (max_iter < 1) {
        throw std::invalid_argument("--max-iter must be at least 1");
    }
    if (jobs < 1) {
        throw std::invalid_argument("--jobs must be at least 1");
    }
    if (!(gtol > 0) || !(ftol >= 0)) {
        throw std::invalid_argument("tolerances must be positive");
    }
}

json RunConfig::to_json() const {
    return {
        {"command", command},
        {"inputs", inputs},
        {"seeds", seeds},
        {"layers", layers},
        {"max_iter", max_iter},
        {"group_order", to_string(order)},
        {"out", out_dir},
        {"gradient", hgsa::to_string(gradient)},
        {"jobs", jobs},
        {"gtol", gtol},
        {"ftol", ftol},
    };
}

const char* to_string(GroupOrder order) {
    return order == GroupOrder::Descending ? "desc" : "asc";
}

GroupOrder group_order_from_string(const std::string& name) {
    if (name == "desc") {
        return GroupOrder::Descending;
    }
    if (name == "asc") {
        return GroupOrder::Ascending;
    }
    throw std::invalid_argument("unknown group order '" + name + "' (expected desc or asc)");
}

uint64_t fnv1a64(std::string_view data) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string file_checksum(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    char hex[17];
    std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(fnv1a64(buf.str())));
    return hex;
}

json provenance(const RunConfig& config) {
    json inputs = json::array();
    for (const std::string& p : config.inputs) {
        inputs.push_back({{"path", p}, {"checksum", file_checksum(p)}});
    }
    return {{"schema", SCHEMA_VERSION}, {"version", HGSA_VERSION}, {"config", config.to_json()}, {"inputs", inputs}};
}

json circuit_json(const Circuit& c) {
    json gates = json::array();
    for (const Gate& g : c.gates()) {
        json item = {{"kind", gate_name(g.kind)}};
        if (is_two_qubit(g.kind)) {
            item["qubits"] = {g.qubits[0], g.qubits[1]};
        } else {
            item["qubits"] = {g.qubits[0]};
        }
        if (is_rotation(g.kind)) {
            item["angle"] = g.angle;
        }
        gates.push_back(std::move(item));
    }
    return {{"num_qubits", c.num_qubits()}, {"two_qubit_count", c.two_qubit_count()}, {"gates", gates}};
}

json partition_json(const GroupedHamiltonian& gh, const PartitionReport& report) {
    json groups = json::array();
    for (size_t k = 0; k < gh.groups.size(); ++k) {
        const CommutingGroup& g = gh.groups[k];
        json members = json::array();
        for (const Term& t : g.members) {
            members.push_back({{"pauli", t.pauli.factor_str()}, {"coefficient", t.coefficient}});
        }
        groups.push_back({
            {"id", k},
            {"norm1", g.norm1},
            {"diagonal", g.is_diagonal},
            {"generators", independent_generators(g).num_rows()},
            {"members", members},
        });
    }
    json checks = json::array();
    for (const CheckResult& c : report.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return {{"num_qubits", gh.num_qubits},
            {"offset", gh.offset},
            {"groups", groups},
            {"checks", checks},
            {"passed", report.passed()}};
}

json synth_json(const AnsatzPlan& plan) {
    json blocks = json::array();
    bool all = true;
    for (const AnsatzBlock& b : plan.blocks) {
        const CommutingGroup& group = plan.grouping.groups[b.group_id];
        bool verified = verify_diagonalization(b.uz, group);
        all = all && verified;
        json local = json::array();
        for (const auto& ops : b.graph.local_ops) {
            json names = json::array();
            for (GateKind k : ops) {
                names.push_back(gate_name(k));
            }
            local.push_back(std::move(names));
        }
        json generators = json::array();
        for (const PauliString& p : b.tableau.rows()) {
            generators.push_back(p.str());
        }
        blocks.push_back({
            {"group_id", b.group_id},
            {"members", group.members.size()},
            {"generators", generators},
            {"adjacency", b.graph.adjacency},
            {"edges", b.graph.edge_count()},
            {"local_ops", local},
            {"uz", circuit_json(b.uz)},
            {"verified", verified},
        });
    }
    return {{"num_qubits", plan.num_qubits}, {"hf", plan.hf}, {"blocks", blocks}, {"all_verified", all}};
}

json vqe_json(const QubitHamiltonian& h, double fci, const AnsatzPlan& plan, const std::vector<SeedResult>& results) {
    json runs = json::array();
    double lo = 0;
    double hi = 0;
    double sum = 0;
    for (size_t k = 0; k < results.size(); ++k) {
        const SeedResult& r = results[k];
        runs.push_back({
            {"seed", r.run.seed},
            {"energy", r.run.energy},
            {"error", r.error},
            {"initial_energy", r.run.trace.initial_energy},
            {"min_evaluated_energy", r.run.min_evaluated_energy},
            {"iterations", r.run.trace.entries.size()},
            {"evaluations", r.run.trace.evaluations},
            {"status", to_string(r.run.trace.status)},
            {"wall_seconds", r.run.trace.wall_seconds},
        });
        lo = k == 0 ? r.error : std::min(lo, r.error);
        hi = k == 0 ? r.error : std::max(hi, r.error);
        sum += r.error;
    }
    json summary = {{"min_error", lo}, {"max_error", hi}, {"mean_error", results.empty() ? 0.0 : sum / results.size()}};
    json out = {
        {"name", h.name},
        {"num_qubits", h.num_qubits},
        {"hf", h.hf},
        {"fci_energy", fci},
        {"groups", plan.blocks.size()},
        {"layers", plan.layers},
        {"parameters", plan.num_parameters()},
        {"runs", runs},
        {"summary", summary},
    };
    if (auto ref = h.metadata_number("ref_hf")) {
        out["ref_hf"] = *ref;
    }
    return out;
}

std::string trace_csv(const std::vector<SeedResult>& results) {
    std::string out = "seed,iteration,energy,grad_norm\n";
    char line[128];
    for (const SeedResult& r : results) {
        const OptimizationTrace& t = r.run.trace;
        std::snprintf(line, sizeof(line), "%llu,0,%.15g,%.6e\n", static_cast<unsigned long long>(r.run.seed),
                      t.initial_energy, t.initial_grad_norm);
        out += line;
        for (const TraceEntry& e : t.entries) {
            std::snprintf(line, sizeof(line), "%llu,%zu,%.15g,%.6e\n", static_cast<unsigned long long>(r.run.seed),
                          e.iteration, e.energy, e.grad_norm);
            out += line;
        }
    }
    return out;
}

std::string counts_csv(const std::vector<CountReport>& reports) {
    std::string out = "molecule,num_qubits,num_electrons,ansatz,two_qubit_gates,parameters_all_free,parameters_gamma_only\n";
    for (const CountReport& r : reports) {
        std::string electrons = r.num_electrons ? std::to_string(static_cast<long long>(*r.num_electrons)) : "";
        for (const AnsatzCounts& c : r.rows) {
            out += r.molecule + "," + std::to_string(r.num_qubits) + "," + electrons + "," + c.ansatz + "," +
                   std::to_string(c.two_qubit_gates) + "," + std::to_string(c.parameters_all_free) + "," +
                   std::to_string(c.parameters_gamma_only) + "\n";
        }
    }
    return out;
}

json counts_json(const std::vector<CountReport>& reports) {
    json out = json::array();
    for (const CountReport& r : reports) {
        json rows = json::array();
        for (const AnsatzCounts& c : r.rows) {
            rows.push_back({{"ansatz", c.ansatz},
                            {"two_qubit_gates", c.two_qubit_gates},
                            {"parameters_all_free", c.parameters_all_free},
                            {"parameters_gamma_only", c.parameters_gamma_only}});
        }
        json item = {{"molecule", r.molecule},
                     {"num_qubits", r.num_qubits},
                     {"num_terms", r.num_terms},
                     {"num_groups", r.num_groups},
                     {"rows", rows}};
        if (r.num_electrons) {
            item["num_electrons"] = *r.num_electrons;
        }
        out.push_back(std::move(item));
    }
    return out;
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace hgsa
