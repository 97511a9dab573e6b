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
#include <vector>

#include "hgsa/circuit.h"
#include "hgsa/clifford.h"
#include "hgsa/grouping.h"
#include "hgsa/stabilizer.h"

namespace hgsa {

/// A full-rank stabilizer tableau written as local Cliffords applied to a
/// graph state.
///
/// With L the product of `local_ops` (as a circuit) and G_i = X_i prod_j
/// Z_j^{A_ij} the graph generators, every source row equals L G L^dagger for
/// some signed product G of graph generators.
struct GraphForm {
    size_t num_qubits = 0;
    /// Symmetric, zero diagonal.
    std::vector<std::vector<uint8_t>> adjacency;
    /// Per-qubit one-qubit Cliffords in time order, drawn from {H, S, Sdg, X, Z}.
    std::vector<std::vector<GateKind>> local_ops;
    StabilizerTableau source;

    size_t edge_count() const;
    /// X_i prod_j Z_j^{A_ij}, sign +.
    std::vector<PauliString> graph_generators() const;
    /// The local_ops layer as a circuit.
    Circuit local_circuit() const;
};

/// Brings an n-row tableau to graph form: Hadamards (lowest qubit that raises
/// the X-block rank, repeatedly) until the X block has rank n, Gauss-Jordan
/// row reduction to an identity X block, S to clear Y on the diagonal, and Z
/// to clear negative signs. Throws std::invalid_argument for a tableau without
/// n rows and std::logic_error if the reduced Z block is not symmetric.
GraphForm to_graph_form(const StabilizerTableau& t);

/// H on every qubit, then CZ per edge (i < j, row-major), then local_ops. For
/// every source row P, uz^dagger P uz is diagonal.
Circuit build_diagonalizer(const GraphForm& gf);

/// True iff uz^dagger P uz is an {I,Z} string for every member P.
bool verify_diagonalization(const Circuit& uz, const CommutingGroup& group);

}  // namespace hgsa
