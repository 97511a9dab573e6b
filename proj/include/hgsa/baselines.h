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

#include <optional>
#include <string>
#include <vector>

#include "hgsa/ansatz.h"
#include "hgsa/circuit.h"
#include "hgsa/grouping.h"
#include "hgsa/hamiltonian.h"
#include "hgsa/stabilizer.h"

namespace hgsa {

struct AnsatzCounts {
    std::string ansatz;
    size_t two_qubit_gates = 0;
    size_t parameters_all_free = 0;
    size_t parameters_gamma_only = 0;
};

struct CountReport {
    std::string molecule;
    size_t num_qubits = 0;
    std::optional<double> num_electrons;
    size_t num_terms = 0;
    size_t num_groups = 0;
    /// T-VHA, D-VHA, M-VHA, H-GSA in that order.
    std::vector<AnsatzCounts> rows;

    /// Throws std::out_of_range for an unknown name.
    const AnsatzCounts& row(const std::string& ansatz) const;
};

/// Diagonalizes commuting generators one at a time: pick a pivot qubit with
/// X support, fold the remaining X support onto it with CX, clear Z support
/// with CZ, and rotate the pivot to Z. For every row P, U^dagger P U is
/// diagonal.
Circuit sequential_diagonalizer(const StabilizerTableau& generators);

/// Exponential per term with a CNOT ladder: gates = sum over terms of
/// 2 (w - 1), params = number of terms.
AnsatzCounts count_tvha(const QubitHamiltonian& h);

/// Per group: U and U^dagger from sequential_diagonalizer plus a CNOT ladder
/// for every diagonalized member; params = number of terms.
AnsatzCounts count_dvha(const QubitHamiltonian& h, GroupOrder order = GroupOrder::Descending);

/// Per group: U and U^dagger from sequential_diagonalizer around three
/// rotations per qubit; params 3 n m (all free) or n m.
AnsatzCounts count_mvha(const QubitHamiltonian& h, GroupOrder order = GroupOrder::Descending);

/// Two-qubit gates of every U_z and U_z^dagger in the plan; params 3 n m L
/// (all free) or n m L.
AnsatzCounts count_hgsa(const AnsatzPlan& plan);

/// All four ansatz counts for one Hamiltonian, with a single-layer plan.
CountReport count_all(const QubitHamiltonian& h, GroupOrder order = GroupOrder::Descending);

}  // namespace hgsa
