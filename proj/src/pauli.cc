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

#include "hgsa/pauli.h"

#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace hgsa {

namespace {

size_t words_for(size_t num_qubits) { return (num_qubits + 63) / 64; }

void check_same_size(const PauliString& a, const PauliString& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument(
            "Pauli size mismatch: " + std::to_string(a.num_qubits()) + " vs " +
            std::to_string(b.num_qubits()));
    }
}

int pauli_rank(char p) {
    switch (p) {
        case 'I':
            return 0;
        case 'X':
            return 1;
        case 'Y':
            return 2;
        default:
            return 3;
    }
}

}  // namespace

PauliString::PauliString(size_t num_qubits)
    : num_qubits_(num_qubits), xs_(words_for(num_qubits), 0), zs_(words_for(num_qubits), 0) {}

PauliString PauliString::from_str(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    PauliString result(text.size());
    result.sign_ = negative;
    for (size_t q = 0; q < text.size(); ++q) {
        char c = text[q];
        if (c == '_') {
            c = 'I';
        }
        result.set_pauli(q, c);
    }
    return result;
}

PauliString PauliString::from_factors(size_t num_qubits, std::string_view factors) {
    PauliString result(num_qubits);
    size_t pos = 0;
    while (pos < factors.size()) {
        while (pos < factors.size() && std::isspace(static_cast<unsigned char>(factors[pos]))) {
            ++pos;
        }
        if (pos == factors.size()) {
            break;
        }
        char p = factors[pos++];
        if (p != 'X' && p != 'Y' && p != 'Z') {
            throw std::invalid_argument(std::string("bad Pauli factor '") + p + "'");
        }
        size_t q = 0;
        auto [end, ec] = std::from_chars(factors.data() + pos, factors.data() + factors.size(), q);
        if (ec != std::errc() || end == factors.data() + pos) {
            throw std::invalid_argument("Pauli factor is missing its qubit index");
        }
        pos = end - factors.data();
        if (q >= num_qubits) {
            throw std::out_of_range(
                "qubit index " + std::to_string(q) + " out of range for " +
                std::to_string(num_qubits) + " qubits");
        }
        if (result.pauli_at(q) != 'I') {
            throw std::invalid_argument("qubit " + std::to_string(q) + " appears twice");
        }
        result.set_pauli(q, p);
    }
    return result;
}

void PauliString::set_x(size_t q, bool v) {
    uint64_t bit = uint64_t{1} << (q & 63);
    xs_[q >> 6] = v ? (xs_[q >> 6] | bit) : (xs_[q >> 6] & ~bit);
}

void PauliString::set_z(size_t q, bool v) {
    uint64_t bit = uint64_t{1} << (q & 63);
    zs_[q >> 6] = v ? (zs_[q >> 6] | bit) : (zs_[q >> 6] & ~bit);
}

char PauliString::pauli_at(size_t q) const {
    return "IXZY"[x(q) | (z(q) << 1)];
}

void PauliString::set_pauli(size_t q, char p) {
    if (q >= num_qubits_) {
        throw std::out_of_range("qubit index out of range");
    }
    switch (p) {
        case 'I':
            set_x(q, false);
            set_z(q, false);
            break;
        case 'X':
            set_x(q, true);
            set_z(q, false);
            break;
        case 'Y':
            set_x(q, true);
            set_z(q, true);
            break;
        case 'Z':
            set_x(q, false);
            set_z(q, true);
            break;
        default:
            throw std::invalid_argument(std::string("bad Pauli character '") + p + "'");
    }
}

size_t PauliString::weight() const {
    size_t total = 0;
    for (size_t w = 0; w < xs_.size(); ++w) {
        total += std::popcount(xs_[w] | zs_[w]);
    }
    return total;
}

bool PauliString::is_diagonal() const {
    for (uint64_t w : xs_) {
        if (w) {
            return false;
        }
    }
    return true;
}

bool PauliString::is_identity_pattern() const {
    for (size_t w = 0; w < xs_.size(); ++w) {
        if (xs_[w] | zs_[w]) {
            return false;
        }
    }
    return true;
}

size_t PauliString::count_y() const {
    size_t total = 0;
    for (size_t w = 0; w < xs_.size(); ++w) {
        total += std::popcount(xs_[w] & zs_[w]);
    }
    return total;
}

std::string PauliString::str() const {
    std::string out(1, sign_ ? '-' : '+');
    for (size_t q = 0; q < num_qubits_; ++q) {
        out.push_back(pauli_at(q));
    }
    return out;
}

std::string PauliString::factor_str() const {
    std::string out;
    for (size_t q = 0; q < num_qubits_; ++q) {
        char p = pauli_at(q);
        if (p == 'I') {
            continue;
        }
        if (!out.empty()) {
            out.push_back(' ');
        }
        out.push_back(p);
        out += std::to_string(q);
    }
    return out;
}

bool PauliString::same_pattern(const PauliString& other) const {
    return num_qubits_ == other.num_qubits_ && xs_ == other.xs_ && zs_ == other.zs_;
}

bool canonical_less(const PauliString& a, const PauliString& b) {
    size_t n = std::min(a.num_qubits(), b.num_qubits());
    for (size_t q = 0; q < n; ++q) {
        int ra = pauli_rank(a.pauli_at(q));
        int rb = pauli_rank(b.pauli_at(q));
        if (ra != rb) {
            return ra < rb;
        }
    }
    return a.num_qubits() < b.num_qubits();
}

std::complex<double> PauliProduct::phase() const {
    static const std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[log_i & 3];
}

PauliProduct multiply(const PauliString& a, const PauliString& b) {
    check_same_size(a, b);
    PauliProduct out{0, PauliString(a.num_qubits())};
    // Cyclic pairs XY, YZ, ZX contribute +i; the reversed pairs contribute -i.
    int plus = 0;
    int minus = 0;
    auto ax = a.x_words();
    auto az = a.z_words();
    auto bx = b.x_words();
    auto bz = b.z_words();
    auto cx = out.value.x_words();
    auto cz = out.value.z_words();
    for (size_t w = 0; w < ax.size(); ++w) {
        uint64_t a_x = ax[w] & ~az[w];
        uint64_t a_y = ax[w] & az[w];
        uint64_t a_z = ~ax[w] & az[w];
        uint64_t b_x = bx[w] & ~bz[w];
        uint64_t b_y = bx[w] & bz[w];
        uint64_t b_z = ~bx[w] & bz[w];
        plus += std::popcount((a_x & b_y) | (a_y & b_z) | (a_z & b_x));
        minus += std::popcount((a_y & b_x) | (a_z & b_y) | (a_x & b_z));
        cx[w] = ax[w] ^ bx[w];
        cz[w] = az[w] ^ bz[w];
    }
    int log_i = plus - minus + 2 * (int(a.sign()) + int(b.sign()));
    out.log_i = static_cast<uint8_t>(((log_i % 4) + 4) % 4);
    return out;
}

void multiply_into(PauliString& a, const PauliString& b) {
    PauliProduct p = multiply(a, b);
    if (p.log_i & 1) {
        throw std::logic_error("product of anticommuting Pauli strings has an imaginary phase");
    }
    a = std::move(p.value);
    a.set_sign(p.log_i == 2);
}

const char* to_string(CommutationKind kind) {
    switch (kind) {
        case CommutationKind::QWC:
            return "QWC";
        case CommutationKind::GC:
            return "GC";
        case CommutationKind::NonCommuting:
            return "NonCommuting";
    }
    return "?";
}

size_t anticommuting_positions(const PauliString& a, const PauliString& b) {
    check_same_size(a, b);
    size_t total = 0;
    auto ax = a.x_words();
    auto az = a.z_words();
    auto bx = b.x_words();
    auto bz = b.z_words();
    for (size_t w = 0; w < ax.size(); ++w) {
        total += std::popcount((ax[w] & bz[w]) ^ (az[w] & bx[w]));
    }
    return total;
}

CommutationKind classify_commutation(const PauliString& a, const PauliString& b) {
    size_t k = anticommuting_positions(a, b);
    if (k == 0) {
        return CommutationKind::QWC;
    }
    return (k & 1) ? CommutationKind::NonCommuting : CommutationKind::GC;
}

bool commutes(const PauliString& a, const PauliString& b) {
    return (anticommuting_positions(a, b) & 1) == 0;
}

double one_norm(std::span<const Term> terms) {
    double total = 0;
    for (const Term& t : terms) {
        total += std::abs(t.coefficient);
    }
    return total;
}

}  // namespace hgsa
