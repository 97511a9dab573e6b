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
#include <optional>
#include <span>
#include <vector>

#include "hgsa/pauli.h"

namespace hgsa {

/// Incremental GF(2) row echelon over the [x|z] part of Pauli strings. Signs
/// are ignored.
class Gf2Basis {
   public:
    explicit Gf2Basis(size_t num_qubits);

    /// Adds `p` if it is independent of the rows so far; returns whether it was.
    bool add(const PauliString& p);
    bool contains(const PauliString& p) const;
    /// Indices (in add order, counting only accepted rows) of the rows whose
    /// sum is `p`, or nullopt when `p` is outside the span.
    std::optional<std::vector<size_t>> decompose(const PauliString& p) const;
    size_t rank() const { return rows_.size(); }

   private:
    struct Row {
        std::vector<uint64_t> bits;
        std::vector<uint64_t> combo;
        size_t pivot;
    };

    std::vector<uint64_t> pack(const PauliString& p) const;
    void reduce(std::vector<uint64_t>& bits, std::vector<uint64_t>* combo) const;

    size_t num_qubits_;
    size_t words_;
    std::vector<Row> rows_;
};

/// GF(2) rank of the [x|z] vectors.
size_t gf2_rank(std::span<const PauliString> rows);
/// GF(2) rank of the x-vectors alone.
size_t gf2_rank_x(std::span<const PauliString> rows);

/// A basis (as diagonal Pauli strings) of the z-vectors orthogonal to every
/// x-vector in `rows`, i.e. all {I,Z} strings commuting with each row.
std::vector<PauliString> commuting_diagonal_basis(std::span<const PauliString> rows, size_t num_qubits);
/// A basis of all Pauli patterns commuting with every row (symplectic complement).
std::vector<PauliString> commutant_basis(std::span<const PauliString> rows, size_t num_qubits);

}  // namespace hgsa
