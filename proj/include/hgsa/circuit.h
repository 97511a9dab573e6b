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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hgsa {

enum class GateKind : uint8_t { H, S, Sdg, X, Y, Z, CZ, CX, RZ, RY };

const char* gate_name(GateKind kind);
std::optional<GateKind> gate_from_name(std::string_view name);
bool is_two_qubit(GateKind kind);
bool is_clifford(GateKind kind);
bool is_rotation(GateKind kind);
/// The kind whose unitary is the adjoint of `kind` (angles negate separately).
GateKind adjoint_kind(GateKind kind);

struct Gate {
    GateKind kind;
    /// For CX, qubits[0] is the control and qubits[1] the target.
    std::array<uint32_t, 2> qubits{0, 0};
    double angle = 0;

    bool operator==(const Gate&) const = default;
};

/// An ordered gate list on a fixed register. Gates apply in list order, so the
/// circuit unitary is gates.back() * ... * gates.front().
class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(size_t num_qubits) : num_qubits_(num_qubits) {}

    size_t num_qubits() const { return num_qubits_; }
    const std::vector<Gate>& gates() const { return gates_; }
    size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    /// Appends after checking index range and distinctness.
    Circuit& append(const Gate& gate);
    Circuit& append(GateKind kind, uint32_t q);
    Circuit& append(GateKind kind, uint32_t a, uint32_t b);
    Circuit& rotation(GateKind kind, uint32_t q, double angle);
    Circuit& append(const Circuit& other);

    /// The adjoint circuit: reversed order, S <-> Sdg, rotation angles negated.
    Circuit inverse() const;

    /// Number of CZ plus CX gates.
    size_t two_qubit_count() const;
    bool is_clifford() const;

    std::string str() const;

   private:
    size_t num_qubits_ = 0;
    std::vector<Gate> gates_;
};

}  // namespace hgsa
