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

#include "hgsa/circuit.h"
#include "hgsa/pauli.h"

namespace hgsa {

/// In place P <- G P G^dagger for one Clifford gate, with exact sign tracking.
/// Throws std::invalid_argument for rotation gates.
void conjugate_by_gate(const Gate& gate, PauliString& p);

/// In place P <- G^dagger P G.
void conjugate_by_gate_dagger(const Gate& gate, PauliString& p);

/// U^dagger P U where U is the unitary of the Clifford-only circuit `c`.
PauliString conjugate_pauli(const Circuit& c, const PauliString& p);

/// U P U^dagger.
PauliString conjugate_pauli_forward(const Circuit& c, const PauliString& p);

}  // namespace hgsa
