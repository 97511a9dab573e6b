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

#include "hgsa/graph_synth.h"

#include <algorithm>
#include <stdexcept>

#include "hgsa/gf2.h"

namespace hgsa {

size_t GraphForm::edge_count() const {
    size_t edges = 0;
    for (size_t i = 0; i < num_qubits; ++i) {
        for (size_t j = i + 1; j < num_qubits; ++j) {
            edges += adjacency[i][j];
        }
    }
    return edges;
}

std::vector<PauliString> GraphForm::graph_generators() const {
    std::vector<PauliString> out;
    for (size_t i = 0; i < num_qubits; ++i) {
        PauliString g(num_qubits);
        g.set_x(i, true);
        for (size_t j = 0; j < num_qubits; ++j) {
            if (adjacency[i][j]) {
                g.set_z(j, true);
            }
        }
        out.push_back(std::move(g));
    }
    return out;
}

Circuit GraphForm::local_circuit() const {
    Circuit c(num_qubits);
    for (size_t q = 0; q < num_qubits; ++q) {
        for (GateKind k : local_ops[q]) {
            c.append(k, static_cast<uint32_t>(q));
        }
    }
    return c;
}

GraphForm to_graph_form(const StabilizerTableau& t) {
    const size_t n = t.num_qubits();
    if (t.num_rows() != n) {
        throw std::invalid_argument(
            "to_graph_form needs " + std::to_string(n) + " rows, got " + std::to_string(t.num_rows()));
    }
    std::vector<PauliString> rows = t.rows();
    // One-qubit gates applied as P -> G P G^dagger, per qubit in time order.
    std::vector<std::vector<GateKind>> applied(n);
    auto apply = [&](GateKind kind, size_t q) {
        Gate g{kind, {static_cast<uint32_t>(q), static_cast<uint32_t>(q)}, 0};
        for (PauliString& r : rows) {
            conjugate_by_gate(g, r);
        }
        applied[q].push_back(kind);
    };

    // 1. Hadamards until the X block is full rank.
    size_t rank = gf2_rank_x(rows);
    while (rank < n) {
        bool raised = false;
        for (size_t q = 0; q < n && !raised; ++q) {
            std::vector<PauliString> trial = rows;
            Gate h{GateKind::H, {static_cast<uint32_t>(q), static_cast<uint32_t>(q)}, 0};
            for (PauliString& r : trial) {
                conjugate_by_gate(h, r);
            }
            size_t trial_rank = gf2_rank_x(trial);
            if (trial_rank > rank) {
                apply(GateKind::H, q);
                rank = trial_rank;
                raised = true;
            }
        }
        if (!raised) {
            throw std::logic_error("to_graph_form: no Hadamard raises the X-block rank");
        }
    }

    // 2. Gauss-Jordan on the X block. Rows commute, so products stay real.
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && !rows[p].x(c)) {
            ++p;
        }
        if (p == n) {
            throw std::logic_error("to_graph_form: X block lost rank during elimination");
        }
        std::swap(rows[p], rows[c]);
        for (size_t r = 0; r < n; ++r) {
            if (r != c && rows[r].x(c)) {
                multiply_into(rows[r], rows[c]);
            }
        }
    }

    // 3. The Z block must now be symmetric; clear its diagonal.
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (rows[i].z(j) != rows[j].z(i)) {
                throw std::logic_error("to_graph_form: Z block is not symmetric (rows do not commute)");
            }
        }
    }
    for (size_t j = 0; j < n; ++j) {
        if (rows[j].z(j)) {
            apply(GateKind::S, j);
        }
    }

    // 4. Clear negative signs. Z_j only touches row j, the sole row with X on j.
    for (size_t j = 0; j < n; ++j) {
        if (rows[j].sign()) {
            apply(GateKind::Z, j);
        }
    }

    GraphForm gf;
    gf.num_qubits = n;
    gf.source = t;
    gf.adjacency.assign(n, std::vector<uint8_t>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (i != j && rows[i].z(j)) {
                gf.adjacency[i][j] = 1;
            }
        }
    }
    gf.local_ops.resize(n);
    for (size_t q = 0; q < n; ++q) {
        for (auto it = applied[q].rbegin(); it != applied[q].rend(); ++it) {
            gf.local_ops[q].push_back(adjoint_kind(*it));
        }
    }
    return gf;
}

Circuit build_diagonalizer(const GraphForm& gf) {
    const size_t n = gf.num_qubits;
    Circuit c(n);
    for (size_t q = 0; q < n; ++q) {
        c.append(GateKind::H, static_cast<uint32_t>(q));
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (gf.adjacency[i][j]) {
                c.append(GateKind::CZ, static_cast<uint32_t>(i), static_cast<uint32_t>(j));
            }
        }
    }
    c.append(gf.local_circuit());
    return c;
}

bool verify_diagonalization(const Circuit& uz, const CommutingGroup& group) {
    return std::all_of(group.members.begin(), group.members.end(), [&](const Term& t) {
        return conjugate_pauli(uz, t.pauli).is_diagonal();
    });
}

}  // namespace hgsa
