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

#include "hgsa/gf2.h"

#include <bit>
#include <stdexcept>

namespace hgsa {

namespace {

bool test_bit(const std::vector<uint64_t>& v, size_t k) { return (v[k >> 6] >> (k & 63)) & 1; }

void flip_bit(std::vector<uint64_t>& v, size_t k) { v[k >> 6] ^= uint64_t{1} << (k & 63); }

void xor_into(std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    for (size_t w = 0; w < a.size(); ++w) {
        a[w] ^= b[w];
    }
}

std::optional<size_t> lowest_bit(const std::vector<uint64_t>& v) {
    for (size_t w = 0; w < v.size(); ++w) {
        if (v[w]) {
            return w * 64 + std::countr_zero(v[w]);
        }
    }
    return std::nullopt;
}

/// Null space of a dense GF(2) matrix given as rows of `cols` bits. Basis
/// vectors are produced per free column in ascending order.
std::vector<std::vector<uint8_t>> nullspace(std::vector<std::vector<uint8_t>> a, size_t cols) {
    std::vector<size_t> pivot_cols;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < a.size(); ++c) {
        size_t p = r;
        while (p < a.size() && !a[p][c]) {
            ++p;
        }
        if (p == a.size()) {
            continue;
        }
        std::swap(a[p], a[r]);
        for (size_t i = 0; i < a.size(); ++i) {
            if (i != r && a[i][c]) {
                for (size_t j = 0; j < cols; ++j) {
                    a[i][j] ^= a[r][j];
                }
            }
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<uint8_t> is_pivot(cols, 0);
    for (size_t c : pivot_cols) {
        is_pivot[c] = 1;
    }
    std::vector<std::vector<uint8_t>> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        std::vector<uint8_t> v(cols, 0);
        v[f] = 1;
        for (size_t i = 0; i < pivot_cols.size(); ++i) {
            v[pivot_cols[i]] = a[i][f];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

Gf2Basis::Gf2Basis(size_t num_qubits) : num_qubits_(num_qubits), words_((2 * num_qubits + 63) / 64) {}

std::vector<uint64_t> Gf2Basis::pack(const PauliString& p) const {
    if (p.num_qubits() != num_qubits_) {
        throw std::invalid_argument("Gf2Basis: Pauli size mismatch");
    }
    std::vector<uint64_t> bits(words_, 0);
    for (size_t q = 0; q < num_qubits_; ++q) {
        if (p.x(q)) {
            flip_bit(bits, q);
        }
        if (p.z(q)) {
            flip_bit(bits, num_qubits_ + q);
        }
    }
    return bits;
}

void Gf2Basis::reduce(std::vector<uint64_t>& bits, std::vector<uint64_t>* combo) const {
    for (const Row& row : rows_) {
        if (test_bit(bits, row.pivot)) {
            xor_into(bits, row.bits);
            if (combo) {
                xor_into(*combo, row.combo);
            }
        }
    }
}

bool Gf2Basis::add(const PauliString& p) {
    std::vector<uint64_t> bits = pack(p);
    size_t combo_words = (num_qubits_ * 2 + 64) / 64 + 1;
    std::vector<uint64_t> combo(combo_words, 0);
    reduce(bits, &combo);
    auto pivot = lowest_bit(bits);
    if (!pivot) {
        return false;
    }
    flip_bit(combo, rows_.size());
    rows_.push_back({std::move(bits), std::move(combo), *pivot});
    return true;
}

bool Gf2Basis::contains(const PauliString& p) const {
    std::vector<uint64_t> bits = pack(p);
    reduce(bits, nullptr);
    return !lowest_bit(bits).has_value();
}

std::optional<std::vector<size_t>> Gf2Basis::decompose(const PauliString& p) const {
    std::vector<uint64_t> bits = pack(p);
    size_t combo_words = (num_qubits_ * 2 + 64) / 64 + 1;
    std::vector<uint64_t> combo(combo_words, 0);
    reduce(bits, &combo);
    if (lowest_bit(bits)) {
        return std::nullopt;
    }
    std::vector<size_t> out;
    for (size_t k = 0; k < rows_.size(); ++k) {
        if (test_bit(combo, k)) {
            out.push_back(k);
        }
    }
    return out;
}

size_t gf2_rank(std::span<const PauliString> rows) {
    if (rows.empty()) {
        return 0;
    }
    Gf2Basis basis(rows.front().num_qubits());
    for (const PauliString& p : rows) {
        basis.add(p);
    }
    return basis.rank();
}

size_t gf2_rank_x(std::span<const PauliString> rows) {
    if (rows.empty()) {
        return 0;
    }
    size_t n = rows.front().num_qubits();
    Gf2Basis basis(n);
    for (const PauliString& p : rows) {
        PauliString x_only(n);
        for (size_t q = 0; q < n; ++q) {
            x_only.set_x(q, p.x(q));
        }
        basis.add(x_only);
    }
    return basis.rank();
}

std::vector<PauliString> commuting_diagonal_basis(std::span<const PauliString> rows, size_t num_qubits) {
    std::vector<std::vector<uint8_t>> a;
    for (const PauliString& p : rows) {
        std::vector<uint8_t> r(num_qubits);
        for (size_t q = 0; q < num_qubits; ++q) {
            r[q] = p.x(q);
        }
        a.push_back(std::move(r));
    }
    std::vector<PauliString> out;
    for (const auto& v : nullspace(std::move(a), num_qubits)) {
        PauliString p(num_qubits);
        for (size_t q = 0; q < num_qubits; ++q) {
            p.set_z(q, v[q]);
        }
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<PauliString> commutant_basis(std::span<const PauliString> rows, size_t num_qubits) {
    // Unknown (x', z') commutes with (x, z) iff x.z' + z.x' = 0; columns are [x' | z'].
    std::vector<std::vector<uint8_t>> a;
    for (const PauliString& p : rows) {
        std::vector<uint8_t> r(2 * num_qubits);
        for (size_t q = 0; q < num_qubits; ++q) {
            r[q] = p.z(q);
            r[num_qubits + q] = p.x(q);
        }
        a.push_back(std::move(r));
    }
    std::vector<PauliString> out;
    for (const auto& v : nullspace(std::move(a), 2 * num_qubits)) {
        PauliString p(num_qubits);
        for (size_t q = 0; q < num_qubits; ++q) {
            p.set_x(q, v[q]);
            p.set_z(q, v[num_qubits + q]);
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace hgsa
