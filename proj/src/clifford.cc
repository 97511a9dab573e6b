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

#include "hgsa/clifford.h"

#include <stdexcept>
#include <string>

namespace hgsa {

namespace {

void conjugate_kind(GateKind kind, size_t a, size_t b, PauliString& p) {
    bool xa = p.x(a);
    bool za = p.z(a);
    switch (kind) {
        case GateKind::H:
            // X <-> Z, Y -> -Y.
            if (xa && za) {
                p.flip_sign();
            }
            p.set_x(a, za);
            p.set_z(a, xa);
            return;
        case GateKind::S:
            // X -> Y, Y -> -X.
            if (xa && za) {
                p.flip_sign();
            }
            p.set_z(a, za ^ xa);
            return;
        case GateKind::Sdg:
            // X -> -Y, Y -> X.
            if (xa && !za) {
                p.flip_sign();
            }
            p.set_z(a, za ^ xa);
            return;
        case GateKind::X:
            if (za) {
                p.flip_sign();
            }
            return;
        case GateKind::Y:
            if (xa != za) {
                p.flip_sign();
            }
            return;
        case GateKind::Z:
            if (xa) {
                p.flip_sign();
            }
            return;
        case GateKind::CZ: {
            // X_a -> X_a Z_b, X_b -> Z_a X_b.
            bool xb = p.x(b);
            bool zb = p.z(b);
            if (xa && xb && (za != zb)) {
                p.flip_sign();
            }
            p.set_z(a, za ^ xb);
            p.set_z(b, zb ^ xa);
            return;
        }
        case GateKind::CX: {
            // X_c -> X_c X_t, Z_t -> Z_c Z_t.
            bool xt = p.x(b);
            bool zt = p.z(b);
            if (xa && zt && (xt == za)) {
                p.flip_sign();
            }
            p.set_x(b, xt ^ xa);
            p.set_z(a, za ^ zt);
            return;
        }
        case GateKind::RZ:
        case GateKind::RY:
            break;
    }
    throw std::invalid_argument(std::string("cannot conjugate a Pauli by non-Clifford gate ") + gate_name(kind));
}

void check_size(const Circuit& c, const PauliString& p) {
    if (c.num_qubits() != p.num_qubits()) {
        throw std::invalid_argument("circuit and Pauli string sizes differ");
    }
}

}  // namespace

void conjugate_by_gate(const Gate& gate, PauliString& p) {
    conjugate_kind(gate.kind, gate.qubits[0], gate.qubits[1], p);
}

void conjugate_by_gate_dagger(const Gate& gate, PauliString& p) {
    conjugate_kind(adjoint_kind(gate.kind), gate.qubits[0], gate.qubits[1], p);
}

PauliString conjugate_pauli(const Circuit& c, const PauliString& p) {
    check_size(c, p);
    if (!c.is_clifford()) {
        throw std::invalid_argument("conjugate_pauli requires a Clifford-only circuit");
    }
    PauliString out = p;
    const auto& gates = c.gates();
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        conjugate_by_gate_dagger(*it, out);
    }
    return out;
}

PauliString conjugate_pauli_forward(const Circuit& c, const PauliString& p) {
    check_size(c, p);
    if (!c.is_clifford()) {
        throw std::invalid_argument("conjugate_pauli_forward requires a Clifford-only circuit");
    }
    PauliString out = p;
    for (const Gate& g : c.gates()) {
        conjugate_by_gate(g, out);
    }
    return out;
}

}  // namespace hgsa
