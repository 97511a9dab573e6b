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

#include "hgsa/baselines.h"

#include <stdexcept>

#include "hgsa/clifford.h"

namespace hgsa {

namespace {

size_t ladder(size_t weight) {
    return weight >= 2 ? 2 * (weight - 1) : 0;
}

}  // namespace

const AnsatzCounts& CountReport::row(const std::string& ansatz) const {
    for (const AnsatzCounts& r : rows) {
        if (r.ansatz == ansatz) {
            return r;
        }
    }
    throw std::out_of_range("no count row for " + ansatz);
}

Circuit sequential_diagonalizer(const StabilizerTableau& generators) {
    const size_t n = generators.num_qubits();
    // Images track W^dag P W with W = g1 g2 ... gk, so the circuit runs the
    // recorded gates in reverse.
    std::vector<Gate> recorded;
    std::vector<PauliString> images = generators.rows();
    auto append = [&](GateKind kind, size_t a, size_t b) {
        Gate g{kind, {static_cast<uint32_t>(a), static_cast<uint32_t>(b)}, 0};
        recorded.push_back(g);
        for (PauliString& p : images) {
            conjugate_by_gate_dagger(g, p);
        }
    };

    for (size_t r = 0; r < images.size(); ++r) {
        if (images[r].is_diagonal()) {
            continue;
        }
        size_t pivot = 0;
        while (!images[r].x(pivot)) {
            ++pivot;
        }
        for (size_t q = 0; q < n; ++q) {
            if (images[r].x(q) && images[r].z(q)) {
                append(GateKind::S, q, q);
            }
        }
        for (size_t q = pivot + 1; q < n; ++q) {
            if (images[r].x(q)) {
                append(GateKind::CX, pivot, q);
            }
        }
        for (size_t q = 0; q < n; ++q) {
            if (q != pivot && images[r].z(q)) {
                append(GateKind::CZ, pivot, q);
            }
        }
        append(GateKind::H, pivot, pivot);
        if (!images[r].is_diagonal()) {
            throw std::logic_error("sequential_diagonalizer: row " + std::to_string(r) + " not diagonalized");
        }
    }
    Circuit u(n);
    for (auto it = recorded.rbegin(); it != recorded.rend(); ++it) {
        u.append(*it);
    }
    return u;
}

AnsatzCounts count_tvha(const QubitHamiltonian& h) {
    AnsatzCounts c{"T-VHA", 0, h.terms.size(), h.terms.size()};
    for (const Term& t : h.terms) {
        c.two_qubit_gates += ladder(t.pauli.weight());
    }
    return c;
}

AnsatzCounts count_dvha(const QubitHamiltonian& h, GroupOrder order) {
    AnsatzCounts c{"D-VHA", 0, h.terms.size(), h.terms.size()};
    for (const CommutingGroup& g : partition(h, order).groups) {
        Circuit u = sequential_diagonalizer(independent_generators(g));
        c.two_qubit_gates += 2 * u.two_qubit_count();
        for (const Term& t : g.members) {
            c.two_qubit_gates += ladder(conjugate_pauli(u, t.pauli).weight());
        }
    }
    return c;
}

AnsatzCounts count_mvha(const QubitHamiltonian& h, GroupOrder order) {
    GroupedHamiltonian gh = partition(h, order);
    const size_t m = gh.groups.size();
    AnsatzCounts c{"M-VHA", 0, 3 * h.num_qubits * m, h.num_qubits * m};
    for (const CommutingGroup& g : gh.groups) {
        c.two_qubit_gates += 2 * sequential_diagonalizer(independent_generators(g)).two_qubit_count();
    }
    return c;
}

AnsatzCounts count_hgsa(const AnsatzPlan& plan) {
    const size_t blocks = plan.blocks.size() * plan.layers;
    AnsatzCounts c{"H-GSA", 0, 3 * plan.num_qubits * blocks, plan.num_qubits * blocks};
    for (size_t layer = 0; layer < plan.layers; ++layer) {
        for (const AnsatzBlock& b : plan.blocks) {
            c.two_qubit_gates += b.uz.two_qubit_count() + b.uz_dagger.two_qubit_count();
        }
    }
    return c;
}

CountReport count_all(const QubitHamiltonian& h, GroupOrder order) {
    AnsatzPlan plan = build_ansatz(h, 1, order);
    CountReport r;
    r.molecule = h.name;
    r.num_qubits = h.num_qubits;
    r.num_electrons = h.metadata_number("active_electrons");
    r.num_terms = h.terms.size();
    r.num_groups = plan.blocks.size();
    r.rows = {count_tvha(h), count_dvha(h, order), count_mvha(h, order), count_hgsa(plan)};
    return r;
}

}  // namespace hgsa
