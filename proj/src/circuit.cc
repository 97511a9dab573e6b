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

#include "hgsa/circuit.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hgsa {

namespace {

constexpr std::array<const char*, 10> kNames = {"H", "S", "SDG", "X", "Y", "Z", "CZ", "CX", "RZ", "RY"};

}  // namespace

const char* gate_name(GateKind kind) { return kNames[static_cast<size_t>(kind)]; }

std::optional<GateKind> gate_from_name(std::string_view name) {
    for (size_t k = 0; k < kNames.size(); ++k) {
        if (name == kNames[k]) {
            return static_cast<GateKind>(k);
        }
    }
    return std::nullopt;
}

bool is_two_qubit(GateKind kind) { return kind == GateKind::CZ || kind == GateKind::CX; }

bool is_clifford(GateKind kind) { return !is_rotation(kind); }

bool is_rotation(GateKind kind) { return kind == GateKind::RZ || kind == GateKind::RY; }

GateKind adjoint_kind(GateKind kind) {
    if (kind == GateKind::S) {
        return GateKind::Sdg;
    }
    if (kind == GateKind::Sdg) {
        return GateKind::S;
    }
    return kind;
}

Circuit& Circuit::append(const Gate& gate) {
    if (gate.qubits[0] >= num_qubits_ || (is_two_qubit(gate.kind) && gate.qubits[1] >= num_qubits_)) {
        throw std::out_of_range(std::string("gate ") + gate_name(gate.kind) + " qubit index out of range");
    }
    if (is_two_qubit(gate.kind) && gate.qubits[0] == gate.qubits[1]) {
        throw std::invalid_argument(std::string("gate ") + gate_name(gate.kind) + " needs two distinct qubits");
    }
    Gate g = gate;
    if (!is_two_qubit(g.kind)) {
        g.qubits[1] = g.qubits[0];
    }
    if (!is_rotation(g.kind)) {
        g.angle = 0;
    }
    gates_.push_back(g);
    return *this;
}

Circuit& Circuit::append(GateKind kind, uint32_t q) {
    if (is_two_qubit(kind)) {
        throw std::invalid_argument(std::string("gate ") + gate_name(kind) + " needs two qubits");
    }
    return append(Gate{kind, {q, q}, 0});
}

Circuit& Circuit::append(GateKind kind, uint32_t a, uint32_t b) {
    if (!is_two_qubit(kind)) {
        throw std::invalid_argument(std::string("gate ") + gate_name(kind) + " takes one qubit");
    }
    return append(Gate{kind, {a, b}, 0});
}

Circuit& Circuit::rotation(GateKind kind, uint32_t q, double angle) {
    if (!is_rotation(kind)) {
        throw std::invalid_argument(std::string("gate ") + gate_name(kind) + " is not a rotation");
    }
    return append(Gate{kind, {q, q}, angle});
}

Circuit& Circuit::append(const Circuit& other) {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("circuit size mismatch");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

Circuit Circuit::inverse() const {
    Circuit out(num_qubits_);
    out.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        Gate g = *it;
        g.kind = adjoint_kind(g.kind);
        g.angle = -g.angle;
        if (!is_rotation(g.kind)) {
            g.angle = 0;
        }
        out.gates_.push_back(g);
    }
    return out;
}

size_t Circuit::two_qubit_count() const {
    return std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) { return is_two_qubit(g.kind); });
}

bool Circuit::is_clifford() const {
    return std::all_of(gates_.begin(), gates_.end(), [](const Gate& g) { return hgsa::is_clifford(g.kind); });
}

std::string Circuit::str() const {
    std::ostringstream out;
    for (const Gate& g : gates_) {
        out << gate_name(g.kind) << ' ' << g.qubits[0];
        if (is_two_qubit(g.kind)) {
            out << ' ' << g.qubits[1];
        }
        if (is_rotation(g.kind)) {
            out << ' ' << g.angle;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace hgsa
