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

#include "hgsa/dense.h"

#include <cmath>
#include <stdexcept>

namespace hgsa::dense {

namespace {

using cd = std::complex<double>;

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Eigen::Matrix2cd pauli_2x2(char p) {
    Eigen::Matrix2cd m;
    switch (p) {
        case 'X':
            m << 0, 1, 1, 0;
            break;
        case 'Y':
            m << 0, cd(0, -1), cd(0, 1), 0;
            break;
        case 'Z':
            m << 1, 0, 0, -1;
            break;
        default:
            m << 1, 0, 0, 1;
    }
    return m;
}

/// Embeds one-qubit matrix `m` at qubit q: I ⊗ ... ⊗ m ⊗ ... ⊗ I with qubit 0
/// rightmost in the Kronecker order.
Eigen::MatrixXcd embed(const Eigen::Matrix2cd& m, size_t q, size_t n) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (size_t k = n; k-- > 0;) {
        out = kron(out, k == q ? Eigen::MatrixXcd(m) : Eigen::MatrixXcd::Identity(2, 2));
    }
    return out;
}

}  // namespace

Eigen::Matrix2cd single_qubit_matrix(GateKind kind, double angle) {
    const double r = 1 / std::sqrt(2.0);
    Eigen::Matrix2cd m;
    switch (kind) {
        case GateKind::H:
            m << r, r, r, -r;
            break;
        case GateKind::S:
            m << 1, 0, 0, cd(0, 1);
            break;
        case GateKind::Sdg:
            m << 1, 0, 0, cd(0, -1);
            break;
        case GateKind::X:
            return pauli_2x2('X');
        case GateKind::Y:
            return pauli_2x2('Y');
        case GateKind::Z:
            return pauli_2x2('Z');
        case GateKind::RZ:
            m << std::polar(1.0, -angle / 2), 0, 0, std::polar(1.0, angle / 2);
            break;
        case GateKind::RY:
            m << std::cos(angle / 2), -std::sin(angle / 2), std::sin(angle / 2), std::cos(angle / 2);
            break;
        default:
            throw std::invalid_argument("not a one-qubit gate");
    }
    return m;
}

Eigen::MatrixXcd pauli_matrix(const PauliString& p) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (size_t k = p.num_qubits(); k-- > 0;) {
        out = kron(out, Eigen::MatrixXcd(pauli_2x2(p.pauli_at(k))));
    }
    return p.sign() ? Eigen::MatrixXcd(-out) : out;
}

Eigen::MatrixXcd gate_matrix(const Gate& gate, size_t num_qubits) {
    if (!is_two_qubit(gate.kind)) {
        return embed(single_qubit_matrix(gate.kind, gate.angle), gate.qubits[0], num_qubits);
    }
    // CZ = |0><0|_a ⊗ I + |1><1|_a ⊗ Z_b, CX = |0><0|_c ⊗ I + |1><1|_c ⊗ X_t.
    Eigen::Matrix2cd p0;
    Eigen::Matrix2cd p1;
    p0 << 1, 0, 0, 0;
    p1 << 0, 0, 0, 1;
    Eigen::Matrix2cd target = gate.kind == GateKind::CZ ? pauli_2x2('Z') : pauli_2x2('X');
    size_t a = gate.qubits[0];
    size_t b = gate.qubits[1];
    Eigen::MatrixXcd first = Eigen::MatrixXcd::Identity(1, 1);
    Eigen::MatrixXcd second = Eigen::MatrixXcd::Identity(1, 1);
    for (size_t k = num_qubits; k-- > 0;) {
        Eigen::Matrix2cd f = Eigen::Matrix2cd::Identity();
        Eigen::Matrix2cd s = Eigen::Matrix2cd::Identity();
        if (k == a) {
            f = p0;
            s = p1;
        } else if (k == b) {
            s = target;
        }
        first = kron(first, Eigen::MatrixXcd(f));
        second = kron(second, Eigen::MatrixXcd(s));
    }
    return first + second;
}

Eigen::MatrixXcd circuit_matrix(const Circuit& c) {
    size_t dim = size_t{1} << c.num_qubits();
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (const Gate& g : c.gates()) {
        u = gate_matrix(g, c.num_qubits()) * u;
    }
    return u;
}

Eigen::MatrixXcd hamiltonian_matrix(const QubitHamiltonian& h) {
    size_t dim = size_t{1} << h.num_qubits;
    Eigen::MatrixXcd m = h.offset * Eigen::MatrixXcd::Identity(dim, dim);
    for (const Term& t : h.terms) {
        m += t.coefficient * pauli_matrix(t.pauli);
    }
    return m;
}

bool matrices_commute(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol) {
    return (a * b - b * a).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace hgsa::dense
