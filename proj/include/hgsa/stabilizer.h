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

#include <string>
#include <string_view>
#include <vector>

#include "hgsa/circuit.h"
#include "hgsa/grouping.h"
#include "hgsa/pauli.h"

namespace hgsa {

/// k <= n signed generators in [X|Z|s] form. Rows pairwise commute and are
/// GF(2)-independent in their [X|Z] part.
class StabilizerTableau {
   public:
    StabilizerTableau() = default;
    /// Validates size, commutation and independence; throws std::invalid_argument.
    StabilizerTableau(size_t num_qubits, std::vector<PauliString> rows);

    size_t num_qubits() const { return num_qubits_; }
    size_t num_rows() const { return rows_.size(); }
    const std::vector<PauliString>& rows() const { return rows_; }
    const PauliString& row(size_t k) const { return rows_[k]; }

    /// Rows as "+XZ_Y" strings, one per line.
    std::string str() const;

   private:
    size_t num_qubits_ = 0;
    std::vector<PauliString> rows_;
};

/// Picks, in member order, the members whose [X|Z] vectors are independent of
/// those already taken. Every member is then a GF(2) combination of the rows.
/// Row signs are +.
StabilizerTableau independent_generators(const CommutingGroup& group);

/// Extends a tableau to exactly n rows. Single-qubit Z_j are tried first in
/// ascending j; when those run out, remaining rows come from the {I,Z}
/// commutant and finally from the full commutant, in basis order.
StabilizerTableau complete_generators(const StabilizerTableau& t);

/// (-1)^sign * prod_{j : z_j = 1} (-1)^{b_j}. Throws for non-diagonal `p`.
int diagonal_eigenvalue(const PauliString& p, std::string_view bits);

/// Flips the sign of every row P whose diagonal image uz^dagger P uz has
/// eigenvalue -1 on |hf>. The result stabilizes uz |hf>. Throws
/// std::logic_error when some image is not diagonal.
StabilizerTableau sign_fix(const StabilizerTableau& t, const Circuit& uz, std::string_view hf);

/// All 2^k signed products of the rows (k <= 20), for closure checks.
std::vector<PauliString> enumerate_group(const StabilizerTableau& t);

}  // namespace hgsa
