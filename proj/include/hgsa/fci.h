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

#include "hgsa/hamiltonian.h"

namespace hgsa {

constexpr size_t MAX_FCI_QUBITS = 14;
/// Registers up to this size use a dense Hermitian eigensolver.
constexpr size_t MAX_DENSE_FCI_QUBITS = 10;

/// Smallest eigenvalue of the full qubit Hamiltonian, offset included.
///
/// Dense diagonalization up to MAX_DENSE_FCI_QUBITS, Lanczos with full
/// reorthogonalization above that. Both paths apply the terms one Pauli string
/// at a time and share no code with the ansatz objective. Throws
/// std::invalid_argument above MAX_FCI_QUBITS.
double fci_energy(const QubitHamiltonian& h);

/// The Lanczos path, exposed so tests can compare it with the dense one.
double lanczos_ground_energy(const QubitHamiltonian& h, double tol = 1e-11, size_t max_iter = 600);

}  // namespace hgsa
