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

#include <CLI11/CLI11.hpp>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <thread>

#include "hgsa/ansatz.h"
#include "hgsa/baselines.h"
#include "hgsa/fci.h"
#include "hgsa/grouping.h"
#include "hgsa/hamiltonian.h"
#include "hgsa/report.h"
#include "hgsa/version.h"
#include "hgsa/vqe.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int EXIT_CONTRACT = 1;
constexpr int EXIT_INPUT = 2;

// Bad user input: missing files, malformed Hamiltonians, bad flags.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

hgsa::QubitHamiltonian load_input(const std::string& path) {
    if (!fs::exists(path)) {
        throw InputError("input file not found: " + path);
    }
    try {
        return hgsa::load_hamiltonian(path);
    } catch (const hgsa::ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_json(const hgsa::RunConfig& config, const std::string& file, json body) {
    json doc = hgsa::provenance(config);
    doc["result"] = std::move(body);
    hgsa::write_atomic(fs::path(config.out_dir) / file, doc.dump(2) + "\n");
}

int cmd_partition(const hgsa::RunConfig& config) {
    hgsa::QubitHamiltonian h = load_input(config.inputs.at(0));
    hgsa::GroupedHamiltonian gh = hgsa::partition(h, config.order);
    hgsa::PartitionReport report = hgsa::verify_partition(gh, h, config.order);
    write_json(config, "groups.json", hgsa::partition_json(gh, report));
    std::printf("%s: %zu terms in %zu groups\n", h.name.c_str(), h.terms.size(), gh.groups.size());
    for (const hgsa::CheckResult& c : report.checks) {
        std::printf("  %-34s %s%s%s\n", c.name.c_str(), c.passed ? "ok" : "FAILED", c.detail.empty() ? "" : "  ",
                    c.detail.c_str());
    }
    return report.passed() ? 0 : EXIT_CONTRACT;
}

int cmd_synth(const hgsa::RunConfig& config, bool tamper) {
    hgsa::QubitHamiltonian h = load_input(config.inputs.at(0));
    hgsa::AnsatzPlan plan = hgsa::build_ansatz(h, config.layers, config.order);
    if (tamper) {
        // Negative control: strip the diagonalizer of the first non-diagonal group.
        for (hgsa::AnsatzBlock& b : plan.blocks) {
            if (!plan.grouping.groups[b.group_id].is_diagonal) {
                b.uz = hgsa::Circuit(plan.num_qubits);
                b.uz_dagger = b.uz;
                break;
            }
        }
    }
    json body = hgsa::synth_json(plan);
    write_json(config, "circuits.json", body);
    bool ok = body["all_verified"].get<bool>();
    std::printf("%s: %zu blocks, %zu two-qubit gates per layer, %s\n", h.name.c_str(), plan.blocks.size(),
                hgsa::count_hgsa(plan).two_qubit_gates / plan.layers, ok ? "all verified" : "VERIFICATION FAILED");
    return ok ? 0 : EXIT_CONTRACT;
}

int cmd_vqe(const hgsa::RunConfig& config) {
    hgsa::QubitHamiltonian h = load_input(config.inputs.at(0));
    hgsa::AnsatzPlan plan = hgsa::build_ansatz(h, config.layers, config.order);
    const double fci = hgsa::fci_energy(h);
    hgsa::VqeOptions options;
    options.bfgs.max_iter = config.max_iter;
    options.bfgs.gtol = config.gtol;
    options.bfgs.ftol = config.ftol;
    options.gradient = config.gradient;

    std::vector<hgsa::SeedResult> results(config.seeds.size());
    std::vector<std::string> errors(config.seeds.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t k = next++; k < config.seeds.size(); k = next++) {
            try {
                results[k].run = hgsa::run_vqe(plan, h, config.seeds[k], options);
                results[k].error = std::abs(results[k].run.energy - fci);
            } catch (const std::exception& e) {
                errors[k] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (size_t j = 1; j < std::min(config.jobs, config.seeds.size()); ++j) {
        pool.emplace_back(worker);
    }
    worker();
    for (std::thread& t : pool) {
        t.join();
    }

    std::vector<hgsa::SeedResult> done;
    for (size_t k = 0; k < results.size(); ++k) {
        if (errors[k].empty()) {
            done.push_back(results[k]);
        } else {
            std::fprintf(stderr, "seed %llu failed: %s\n", static_cast<unsigned long long>(config.seeds[k]),
                         errors[k].c_str());
        }
    }
    write_json(config, "result.json", hgsa::vqe_json(h, fci, plan, done));
    hgsa::write_atomic(fs::path(config.out_dir) / "trace.csv", hgsa::trace_csv(done));

    std::printf("%s: FCI %.10f, %zu blocks, %zu parameters\n", h.name.c_str(), fci, plan.blocks.size(),
                plan.num_parameters());
    for (const hgsa::SeedResult& r : done) {
        std::printf("  seed %-4llu E %.10f  error %.3e  iterations %zu  %s\n",
                    static_cast<unsigned long long>(r.run.seed), r.run.energy, r.error, r.run.trace.entries.size(),
                    hgsa::to_string(r.run.trace.status));
    }
    return done.empty() ? EXIT_CONTRACT : 0;
}

int cmd_counts(const hgsa::RunConfig& config) {
    std::vector<hgsa::CountReport> reports;
    for (const std::string& path : config.inputs) {
        reports.push_back(hgsa::count_all(load_input(path), config.order));
    }
    std::string csv = hgsa::counts_csv(reports);
    hgsa::write_atomic(fs::path(config.out_dir) / "counts.csv", csv);
    write_json(config, "counts.json", hgsa::counts_json(reports));
    std::fputs(csv.c_str(), stdout);
    return 0;
}

int cmd_fci(const hgsa::RunConfig& config, bool write) {
    hgsa::QubitHamiltonian h = load_input(config.inputs.at(0));
    double e = hgsa::fci_energy(h);
    std::printf("%.12f\n", e);
    if (write) {
        json body = {{"name", h.name}, {"num_qubits", h.num_qubits}, {"fci_energy", e}};
        if (auto ref = h.metadata_number("ref_fci")) {
            body["ref_fci"] = *ref;
        }
        write_json(config, "fci.json", body);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamiltonian-based graph-state ansatz toolkit"};
    app.set_version_flag("--version", HGSA_VERSION);
    app.require_subcommand(1);

    hgsa::RunConfig config;
    std::string order = "desc";
    std::string gradient = "adjoint";
    std::vector<uint64_t> seeds{0, 1, 2, 3, 4};
    bool tamper = false;

    auto single_input = [&](CLI::App* sub) {
        sub->add_option("--input,-i", config.inputs, "Hamiltonian file")->required()->expected(1);
        sub->add_option("--group-order", order, "Group order by 1-norm")->check(CLI::IsMember({"desc", "asc"}));
        sub->add_option("--out,-o", config.out_dir, "Output directory");
    };

    CLI::App* partition = app.add_subcommand("partition", "Group terms into commuting sets");
    single_input(partition);
    CLI::App* synth = app.add_subcommand("synth", "Synthesize graph-state diagonalizers");
    single_input(synth);
    synth->add_option("--layers", config.layers, "Ansatz layers");
    synth->add_flag("--tamper", tamper, "Strip one diagonalizer before verifying")->group("");
    CLI::App* vqe = app.add_subcommand("vqe", "Run VQE over seeds");
    single_input(vqe);
    vqe->add_option("--seeds", seeds, "Comma-separated seeds")->delimiter(',');
    vqe->add_option("--layers", config.layers, "Ansatz layers");
    vqe->add_option("--max-iter", config.max_iter, "BFGS iteration cap");
    vqe->add_option("--jobs,-j", config.jobs, "Seeds run in parallel");
    vqe->add_option("--gradient", gradient, "Gradient method")->check(CLI::IsMember({"adjoint", "fd"}));
    vqe->add_option("--gtol", config.gtol, "Gradient infinity-norm tolerance");
    vqe->add_option("--ftol", config.ftol, "Relative energy-change tolerance");
    CLI::App* counts = app.add_subcommand("counts", "Two-qubit gate and parameter counts");
    counts->add_option("--input,-i", config.inputs, "Hamiltonian files");
    counts->add_option("--group-order", order, "Group order by 1-norm")->check(CLI::IsMember({"desc", "asc"}));
    counts->add_option("--out,-o", config.out_dir, "Output directory");
    CLI::App* fci = app.add_subcommand("fci", "Exact ground-state energy");
    single_input(fci);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : EXIT_INPUT;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        config.command = sub->get_name();
        config.order = hgsa::group_order_from_string(order);
        config.gradient = hgsa::gradient_method_from_string(gradient);
        if (sub == vqe) {
            config.seeds = seeds;
            if (seeds.empty()) {
                throw InputError("--seeds must list at least one seed");
            }
        }
        try {
            config.validate();
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        if (sub == partition) {
            return cmd_partition(config);
        }
        if (sub == synth) {
            return cmd_synth(config, tamper);
        }
        if (sub == vqe) {
            return cmd_vqe(config);
        }
        if (sub == counts) {
            return cmd_counts(config);
        }
        return cmd_fci(config, fci->count("--out") > 0);
    } catch (const InputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return EXIT_INPUT;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return EXIT_CONTRACT;
    }
}
