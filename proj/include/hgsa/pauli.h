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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hgsa {

/// A signed n-qubit Pauli operator stored as packed x/z bit vectors.
///
/// Qubit j carries I for (x_j, z_j) = (0, 0), X for (1, 0), Z for (0, 1) and Y
/// for (1, 1). Qubit j lives at bit (j % 64) of word (j / 64). The overall
/// factor is (-1)^sign; imaginary phases are never stored and are instead
/// returned explicitly by the operations that produce them.
///
/// Printed strings put qubit 0 leftmost: "+XIZY" is X0 Z2 Y3.
class PauliString {
   public:
    PauliString() = default;
    /// The identity on `num_qubits` qubits.
    explicit PauliString(size_t num_qubits);

    /// Parses a dense string like "+XIZY", "-X_Z" or "XZ" (sign optional).
    static PauliString from_str(std::string_view text);
    /// Parses sparse factors like "X0 Z2 Y3" on `num_qubits` qubits.
    static PauliString from_factors(size_t num_qubits, std::string_view factors);

    size_t num_qubits() const { return num_qubits_; }
    size_t num_words() const { return xs_.size(); }
    bool sign() const { return sign_; }
    void set_sign(bool negative) { sign_ = negative; }
    void flip_sign() { sign_ = !sign_; }

    bool x(size_t q) const { return (xs_[q >> 6] >> (q & 63)) & 1; }
    bool z(size_t q) const { return (zs_[q >> 6] >> (q & 63)) & 1; }
    void set_x(size_t q, bool v);
    void set_z(size_t q, bool v);
    /// 'I', 'X', 'Y' or 'Z'.
    char pauli_at(size_t q) const;
    void set_pauli(size_t q, char p);

    std::span<const uint64_t> x_words() const { return xs_; }
    std::span<const uint64_t> z_words() const { return zs_; }
    std::span<uint64_t> x_words() { return xs_; }
    std::span<uint64_t> z_words() { return zs_; }

    /// Number of non-identity factors.
    size_t weight() const;
    /// True when the x-vector is all zero (a {I,Z} string).
    bool is_diagonal() const;
    /// True when both x and z are all zero, regardless of sign.
    bool is_identity_pattern() const;
    size_t count_y() const;

    /// Dense form with sign prefix, e.g. "+XIZY".
    std::string str() const;
    /// Sparse factor form without sign, e.g. "X0 Z2 Y3"; empty for identity.
    std::string factor_str() const;

    /// Equality on pattern and sign.
    bool operator==(const PauliString& other) const = default;
    /// Equality on the pattern only.
    bool same_pattern(const PauliString& other) const;

   private:
    size_t num_qubits_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    bool sign_ = false;
};

/// Canonical order used for deterministic tie-breaking: lexicographic over the
/// dense string from qubit 0, with I < X < Y < Z; sign ignored.
bool canonical_less(const PauliString& a, const PauliString& b);

/// The result of multiplying two signed Pauli strings: a * b = i^log_i * value,
/// where `value` always carries sign +.
struct PauliProduct {
    uint8_t log_i = 0;
    PauliString value;

    std::complex<double> phase() const;
};

PauliProduct multiply(const PauliString& a, const PauliString& b);

/// Multiplies `b` into `a` when the product phase is real, folding it into the
/// sign. Throws std::logic_error if the product carries a factor of +-i, which
/// only happens for anticommuting inputs.
void multiply_into(PauliString& a, const PauliString& b);

enum class CommutationKind { QWC, GC, NonCommuting };

const char* to_string(CommutationKind kind);

/// Number of qubits where the single-qubit factors of a and b anticommute.
size_t anticommuting_positions(const PauliString& a, const PauliString& b);
CommutationKind classify_commutation(const PauliString& a, const PauliString& b);
bool commutes(const PauliString& a, const PauliString& b);

/// A weighted Pauli term. The Pauli string carries sign + in Hamiltonians; the
/// coefficient holds the sign.
struct Term {
    double coefficient = 0;
    PauliString pauli;
};

/// Sum of |c_k|.
double one_norm(std::span<const Term> terms);

}  // namespace hgsa
