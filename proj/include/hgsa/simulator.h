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
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "hgsa/circuit.h"
#include "hgsa/hamiltonian.h"
#include "hgsa/pauli.h"

namespace hgsa {

using Amplitude = std::complex<double>;

/// Largest register the dense simulator accepts.
constexpr size_t MAX_SIM_QUBITS = 26;

/// A dense 2^n statevector. Index b holds the amplitude of the basis state
/// whose qubit j value is bit j of b.
class StateVector {
   public:
    StateVector() = default;
    /// |0...0>.
    explicit StateVector(size_t num_qubits);
    /// |bits>, character j giving qubit j.
    static StateVector basis(size_t num_qubits, std::string_view bits);

    size_t num_qubits() const { return num_qubits_; }
    size_t size() const { return amps_.size(); }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    std::span<Amplitude> amplitudes() { return amps_; }
    const Amplitude& operator[](size_t i) const { return amps_[i]; }
    Amplitude& operator[](size_t i) { return amps_[i]; }

    /// Throws std::out_of_range for a qubit index >= n.
    void apply(const Gate& gate);
    void apply(const Circuit& circuit);
    /// Applies [[m00, m01], [m10, m11]] to qubit q.
    void apply_matrix(size_t q, const std::array<Amplitude, 4>& m);

    double norm() const;
    /// <this|other>.
    Amplitude inner(const StateVector& other) const;

   private:
    size_t num_qubits_ = 0;
    std::vector<Amplitude> amps_;
};

/// Bit masks and phase of a Pauli string for action on basis states:
/// P|b> = phase * (-1)^{popcount(b & z)} |b ^ x>.
struct PauliMasks {
    uint64_t x = 0;
    uint64_t z = 0;
    Amplitude phase{1, 0};
};
PauliMasks pauli_masks(const PauliString& p);

/// out = P in.
void apply_pauli(const PauliString& p, std::span<const Amplitude> in, std::span<Amplitude> out);
/// <s|P|s>.
Amplitude pauli_expectation(const StateVector& s, const PauliString& p);

/// Sum_k c_k <s|P_k|s> + offset, term by term. Throws std::logic_error when
/// the imaginary residual exceeds 1e-9 and std::invalid_argument on a size
/// mismatch.
double expectation(const StateVector& s, const QubitHamiltonian& h);

/// A Hamiltonian regrouped by X mask, with one precomputed diagonal weight
/// vector per mask, so that H|b> = sum_x w_x(b) |b ^ x>.
class CompiledHamiltonian {
   public:
    CompiledHamiltonian() = default;
    explicit CompiledHamiltonian(const QubitHamiltonian& h);

    size_t num_qubits() const { return num_qubits_; }
    size_t num_masks() const { return masks_.size(); }
    double offset() const { return offset_; }

    /// <psi|H|psi>, offset included.
    double expectation(std::span<const Amplitude> psi) const;
    /// out = (H - offset) psi.
    void apply(std::span<const Amplitude> psi, std::span<Amplitude> out) const;

   private:
    size_t num_qubits_ = 0;
    double offset_ = 0;
    std::vector<uint64_t> masks_;
    std::vector<std::vector<Amplitude>> weights_;
};

using Objective = std::function<double(std::span<const double>)>;

/// Central finite differences with the given per-coordinate step.
std::vector<double> gradient(const Objective& f, std::span<const double> theta, double step = 1e-4);

}  // namespace hgsa
