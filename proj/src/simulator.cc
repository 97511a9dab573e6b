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

#include "hgsa/simulator.h"

#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace hgsa {

namespace {

constexpr Amplitude I_UNIT{0, 1};

void check_qubit(size_t q, size_t n) {
    if (q >= n) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " + std::to_string(n) + " qubits");
    }
}

// Calls f(i0, i1) for every index pair differing only in bit q, i0 having it clear.
template <typename F>
void for_pairs(size_t size, size_t q, F&& f) {
    const size_t bit = size_t{1} << q;
    for (size_t base = 0; base < size; base += 2 * bit) {
        for (size_t i0 = base; i0 < base + bit; ++i0) {
            f(i0, i0 | bit);
        }
    }
}

}  // namespace

StateVector::StateVector(size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits > MAX_SIM_QUBITS) {
        throw std::invalid_argument("statevector limited to " + std::to_string(MAX_SIM_QUBITS) + " qubits");
    }
    amps_.assign(size_t{1} << num_qubits, Amplitude{0, 0});
    amps_[0] = 1;
}

StateVector StateVector::basis(size_t num_qubits, std::string_view bits) {
    check_bitstring(bits, num_qubits);
    StateVector s(num_qubits);
    size_t index = 0;
    for (size_t q = 0; q < num_qubits; ++q) {
        if (bits[q] == '1') {
            index |= size_t{1} << q;
        }
    }
    s.amps_[0] = 0;
    s.amps_[index] = 1;
    return s;
}

void StateVector::apply_matrix(size_t q, const std::array<Amplitude, 4>& m) {
    check_qubit(q, num_qubits_);
    for_pairs(amps_.size(), q, [&](size_t i0, size_t i1) {
        Amplitude a = amps_[i0];
        Amplitude b = amps_[i1];
        amps_[i0] = m[0] * a + m[1] * b;
        amps_[i1] = m[2] * a + m[3] * b;
    });
}

void StateVector::apply(const Gate& gate) {
    const size_t a = gate.qubits[0];
    const size_t b = gate.qubits[1];
    check_qubit(a, num_qubits_);
    check_qubit(b, num_qubits_);
    const size_t size = amps_.size();
    switch (gate.kind) {
        case GateKind::H: {
            const double r = 1 / std::sqrt(2.0);
            for_pairs(size, a, [&](size_t i0, size_t i1) {
                Amplitude u = amps_[i0];
                Amplitude v = amps_[i1];
                amps_[i0] = (u + v) * r;
                amps_[i1] = (u - v) * r;
            });
            return;
        }
        case GateKind::S:
            for_pairs(size, a, [&](size_t, size_t i1) { amps_[i1] *= I_UNIT; });
            return;
        case GateKind::Sdg:
            for_pairs(size, a, [&](size_t, size_t i1) { amps_[i1] *= -I_UNIT; });
            return;
        case GateKind::X:
            for_pairs(size, a, [&](size_t i0, size_t i1) { std::swap(amps_[i0], amps_[i1]); });
            return;
        case GateKind::Y:
            for_pairs(size, a, [&](size_t i0, size_t i1) {
                Amplitude u = amps_[i0];
                amps_[i0] = -I_UNIT * amps_[i1];
                amps_[i1] = I_UNIT * u;
            });
            return;
        case GateKind::Z:
            for_pairs(size, a, [&](size_t, size_t i1) { amps_[i1] = -amps_[i1]; });
            return;
        case GateKind::CZ: {
            if (a == b) {
                throw std::invalid_argument("CZ on a single qubit");
            }
            const size_t mask = (size_t{1} << a) | (size_t{1} << b);
            for (size_t i = 0; i < size; ++i) {
                if ((i & mask) == mask) {
                    amps_[i] = -amps_[i];
                }
            }
            return;
        }
        case GateKind::CX: {
            if (a == b) {
                throw std::invalid_argument("CX on a single qubit");
            }
            const size_t control = size_t{1} << a;
            for_pairs(size, b, [&](size_t i0, size_t i1) {
                if (i0 & control) {
                    std::swap(amps_[i0], amps_[i1]);
                }
            });
            return;
        }
        case GateKind::RZ: {
            const Amplitude lo = std::polar(1.0, -gate.angle / 2);
            const Amplitude hi = std::polar(1.0, gate.angle / 2);
            for_pairs(size, a, [&](size_t i0, size_t i1) {
                amps_[i0] *= lo;
                amps_[i1] *= hi;
            });
            return;
        }
        case GateKind::RY: {
            const double c = std::cos(gate.angle / 2);
            const double s = std::sin(gate.angle / 2);
            for_pairs(size, a, [&](size_t i0, size_t i1) {
                Amplitude u = amps_[i0];
                Amplitude v = amps_[i1];
                amps_[i0] = c * u - s * v;
                amps_[i1] = s * u + c * v;
            });
            return;
        }
    }
    throw std::invalid_argument("unknown gate kind");
}

void StateVector::apply(const Circuit& circuit) {
    if (circuit.num_qubits() != num_qubits_) {
        throw std::invalid_argument("circuit and state sizes differ");
    }
    for (const Gate& g : circuit.gates()) {
        apply(g);
    }
}

double StateVector::norm() const {
    double total = 0;
    for (const Amplitude& a : amps_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

Amplitude StateVector::inner(const StateVector& other) const {
    if (other.amps_.size() != amps_.size()) {
        throw std::invalid_argument("inner product of states with different sizes");
    }
    Amplitude total{0, 0};
    for (size_t i = 0; i < amps_.size(); ++i) {
        total += std::conj(amps_[i]) * other.amps_[i];
    }
    return total;
}

PauliMasks pauli_masks(const PauliString& p) {
    if (p.num_qubits() > 64) {
        throw std::invalid_argument("pauli_masks supports at most 64 qubits");
    }
    PauliMasks m;
    if (p.num_words() > 0) {
        m.x = p.x_words()[0];
        m.z = p.z_words()[0];
    }
    static constexpr Amplitude POWERS[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    m.phase = POWERS[std::popcount(m.x & m.z) & 3];
    if (p.sign()) {
        m.phase = -m.phase;
    }
    return m;
}

void apply_pauli(const PauliString& p, std::span<const Amplitude> in, std::span<Amplitude> out) {
    const size_t size = size_t{1} << p.num_qubits();
    if (in.size() != size || out.size() != size) {
        throw std::invalid_argument("apply_pauli: dimension mismatch");
    }
    PauliMasks m = pauli_masks(p);
    for (size_t b = 0; b < size; ++b) {
        Amplitude v = m.phase * in[b];
        out[b ^ m.x] = (std::popcount(b & m.z) & 1) ? -v : v;
    }
}

Amplitude pauli_expectation(const StateVector& s, const PauliString& p) {
    if (p.num_qubits() != s.num_qubits()) {
        throw std::invalid_argument("pauli_expectation: dimension mismatch");
    }
    PauliMasks m = pauli_masks(p);
    Amplitude total{0, 0};
    for (size_t b = 0; b < s.size(); ++b) {
        Amplitude v = std::conj(s[b ^ m.x]) * s[b];
        total += (std::popcount(b & m.z) & 1) ? -v : v;
    }
    return m.phase * total;
}

double expectation(const StateVector& s, const QubitHamiltonian& h) {
    if (h.num_qubits != s.num_qubits()) {
        throw std::invalid_argument("expectation: Hamiltonian has " + std::to_string(h.num_qubits) +
                                    " qubits, state has " + std::to_string(s.num_qubits()));
    }
    Amplitude total{h.offset, 0};
    for (const Term& t : h.terms) {
        total += t.coefficient * pauli_expectation(s, t.pauli);
    }
    if (std::abs(total.imag()) > 1e-9) {
        throw std::logic_error("expectation has imaginary residual " + std::to_string(total.imag()));
    }
    return total.real();
}

CompiledHamiltonian::CompiledHamiltonian(const QubitHamiltonian& h)
    : num_qubits_(h.num_qubits), offset_(h.offset) {
    if (num_qubits_ > MAX_SIM_QUBITS) {
        throw std::invalid_argument("CompiledHamiltonian limited to " + std::to_string(MAX_SIM_QUBITS) + " qubits");
    }
    const size_t size = size_t{1} << num_qubits_;
    std::map<uint64_t, size_t> slot;
    for (const Term& t : h.terms) {
        PauliMasks m = pauli_masks(t.pauli);
        auto [it, inserted] = slot.emplace(m.x, masks_.size());
        if (inserted) {
            masks_.push_back(m.x);
            weights_.emplace_back(size, Amplitude{0, 0});
        }
        std::vector<Amplitude>& w = weights_[it->second];
        Amplitude c = t.coefficient * m.phase;
        for (size_t b = 0; b < size; ++b) {
            w[b] += (std::popcount(b & m.z) & 1) ? -c : c;
        }
    }
}

double CompiledHamiltonian::expectation(std::span<const Amplitude> psi) const {
    const size_t size = size_t{1} << num_qubits_;
    if (psi.size() != size) {
        throw std::invalid_argument("CompiledHamiltonian::expectation: dimension mismatch");
    }
    double total = offset_;
    for (size_t k = 0; k < masks_.size(); ++k) {
        const uint64_t x = masks_[k];
        const Amplitude* w = weights_[k].data();
        Amplitude acc{0, 0};
        for (size_t b = 0; b < size; ++b) {
            acc += std::conj(psi[b ^ x]) * w[b] * psi[b];
        }
        total += acc.real();
    }
    return total;
}

void CompiledHamiltonian::apply(std::span<const Amplitude> psi, std::span<Amplitude> out) const {
    const size_t size = size_t{1} << num_qubits_;
    if (psi.size() != size || out.size() != size) {
        throw std::invalid_argument("CompiledHamiltonian::apply: dimension mismatch");
    }
    std::fill(out.begin(), out.end(), Amplitude{0, 0});
    for (size_t k = 0; k < masks_.size(); ++k) {
        const uint64_t x = masks_[k];
        const Amplitude* w = weights_[k].data();
        for (size_t b = 0; b < size; ++b) {
            out[b ^ x] += w[b] * psi[b];
        }
    }
}

std::vector<double> gradient(const Objective& f, std::span<const double> theta, double step) {
    if (!(step > 0)) {
        throw std::invalid_argument("gradient step must be positive");
    }
    std::vector<double> point(theta.begin(), theta.end());
    std::vector<double> g(theta.size());
    for (size_t k = 0; k < theta.size(); ++k) {
        point[k] = theta[k] + step;
        double up = f(point);
        point[k] = theta[k] - step;
        double down = f(point);
        point[k] = theta[k];
        g[k] = (up - down) / (2 * step);
    }
    return g;
}

}  // namespace hgsa
