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

// Dense 2^n x 2^n matrices built by Kronecker products. These are slow and
// exist as reference oracles for small registers; nothing on a hot path uses
// them.

#include <Eigen/Dense>

#include "hgsa/circuit.h"
#include "hgsa/hamiltonian.h"
#include "hgsa/pauli.h"

namespace hgsa::dense {

/// The 2x2 matrix of gate `kind` (rotations use `angle`). One-qubit kinds only.
Eigen::Matrix2cd single_qubit_matrix(GateKind kind, double angle = 0);

/// Full matrix of a signed Pauli string, qubit 0 as the least significant
/// index bit.
Eigen::MatrixXcd pauli_matrix(const PauliString& p);

Eigen::MatrixXcd gate_matrix(const Gate& gate, size_t num_qubits);

/// gates.back() * ... * gates.front().
Eigen::MatrixXcd circuit_matrix(const Circuit& c);

/// Sum of c_k P_k plus offset * I.
Eigen::MatrixXcd hamiltonian_matrix(const QubitHamiltonian& h);

/// True when [A, B] vanishes entrywise within `tol`.
bool matrices_commute(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol = 1e-12);

}  // namespace hgsa::dense
