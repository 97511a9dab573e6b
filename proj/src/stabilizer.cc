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

#include "hgsa/stabilizer.h"

#include <stdexcept>

#include "hgsa/clifford.h"
#include "hgsa/gf2.h"
#include "hgsa/hamiltonian.h"

namespace hgsa {

StabilizerTableau::StabilizerTableau(size_t num_qubits, std::vector<PauliString> rows)
    : num_qubits_(num_qubits), rows_(std::move(rows)) {
    if (rows_.size() > num_qubits_) {
        throw std::invalid_argument("tableau has more rows than qubits");
    }
    Gf2Basis basis(num_qubits_);
    for (size_t a = 0; a < rows_.size(); ++a) {
        if (rows_[a].num_qubits() != num_qubits_) {
            throw std::invalid_argument("tableau row has the wrong qubit count");
        }
        if (!basis.add(rows_[a])) {
            throw std::invalid_argument("tableau row " + std::to_string(a) + " is dependent");
        }
        for (size_t b = 0; b < a; ++b) {
            if (!commutes(rows_[a], rows_[b])) {
                throw std::invalid_argument(
                    "tableau rows " + std::to_string(b) + " and " + std::to_string(a) + " anticommute");
            }
        }
    }
}

std::string StabilizerTableau::str() const {
    std::string out;
    for (const PauliString& p : rows_) {
        out += p.str() + "\n";
    }
    return out;
}

StabilizerTableau independent_generators(const CommutingGroup& group) {
    if (group.members.empty()) {
        throw std::invalid_argument("independent_generators: empty group");
    }
    size_t n = group.members.front().pauli.num_qubits();
    Gf2Basis basis(n);
    std::vector<PauliString> rows;
    for (const Term& t : group.members) {
        if (basis.add(t.pauli)) {
            PauliString p = t.pauli;
            p.set_sign(false);
            rows.push_back(std::move(p));
        }
    }
    return StabilizerTableau(n, std::move(rows));
}

StabilizerTableau complete_generators(const StabilizerTableau& t) {
    size_t n = t.num_qubits();
    std::vector<PauliString> rows = t.rows();
    Gf2Basis basis(n);
    for (const PauliString& p : rows) {
        basis.add(p);
    }
    auto try_add = [&](const PauliString& candidate) {
        if (rows.size() == n) {
            return;
        }
        for (const PauliString& r : rows) {
            if (!commutes(r, candidate)) {
                return;
            }
        }
        if (basis.add(candidate)) {
            rows.push_back(candidate);
        }
    };

    for (size_t q = 0; q < n && rows.size() < n; ++q) {
        PauliString z(n);
        z.set_z(q, true);
        try_add(z);
    }
    if (rows.size() < n) {
        for (const PauliString& c : commuting_diagonal_basis(rows, n)) {
            try_add(c);
        }
    }
    if (rows.size() < n) {
        // The commutant of an isotropic subspace of rank k has rank 2n - k, so a
        // fresh commuting vector always exists while k < n. The basis is
        // recomputed after every addition because it shrinks.
        while (rows.size() < n) {
            size_t before = rows.size();
            for (const PauliString& c : commutant_basis(rows, n)) {
                try_add(c);
                if (rows.size() > before) {
                    break;
                }
            }
            if (rows.size() == before) {
                throw std::logic_error("complete_generators: no commuting completion found");
            }
        }
    }
    return StabilizerTableau(n, std::move(rows));
}

int diagonal_eigenvalue(const PauliString& p, std::string_view bits) {
    if (!p.is_diagonal()) {
        throw std::invalid_argument("diagonal_eigenvalue: " + p.str() + " is not diagonal");
    }
    check_bitstring(bits, p.num_qubits());
    bool negative = p.sign();
    for (size_t q = 0; q < p.num_qubits(); ++q) {
        if (p.z(q) && bits[q] == '1') {
            negative = !negative;
        }
    }
    return negative ? -1 : 1;
}

StabilizerTableau sign_fix(const StabilizerTableau& t, const Circuit& uz, std::string_view hf) {
    std::vector<PauliString> rows = t.rows();
    for (size_t k = 0; k < rows.size(); ++k) {
        PauliString image = conjugate_pauli(uz, rows[k]);
        if (!image.is_diagonal()) {
            throw std::logic_error("sign_fix: row " + std::to_string(k) + " " + rows[k].str() +
                                   " is not diagonalized (image " + image.str() + ")");
        }
        if (diagonal_eigenvalue(image, hf) == -1) {
            rows[k].flip_sign();
        }
    }
    return StabilizerTableau(t.num_qubits(), std::move(rows));
}

std::vector<PauliString> enumerate_group(const StabilizerTableau& t) {
    size_t k = t.num_rows();
    if (k > 20) {
        throw std::invalid_argument("enumerate_group: too many rows");
    }
    std::vector<PauliString> out;
    out.reserve(size_t{1} << k);
    for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
        PauliString acc(t.num_qubits());
        for (size_t r = 0; r < k; ++r) {
            if ((mask >> r) & 1) {
                multiply_into(acc, t.row(r));
            }
        }
        out.push_back(std::move(acc));
    }
    return out;
}

}  // namespace hgsa
