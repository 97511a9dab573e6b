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

#include "hgsa/fci.h"

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "hgsa/simulator.h"

namespace hgsa {

namespace {

using CVec = Eigen::VectorXcd;

void check_size(const QubitHamiltonian& h) {
    if (h.num_qubits > MAX_FCI_QUBITS) {
        throw std::invalid_argument("fci_energy supports at most " + std::to_string(MAX_FCI_QUBITS) + " qubits, got " +
                                    std::to_string(h.num_qubits));
    }
}

// out = (H - offset) in, one term at a time.
void matvec(const QubitHamiltonian& h, const std::vector<PauliMasks>& masks, const CVec& in, CVec& out) {
    out.setZero();
    const size_t size = static_cast<size_t>(in.size());
    for (size_t k = 0; k < masks.size(); ++k) {
        const PauliMasks& m = masks[k];
        const Amplitude c = h.terms[k].coefficient * m.phase;
        for (size_t b = 0; b < size; ++b) {
            Amplitude v = c * in[static_cast<Eigen::Index>(b)];
            out[static_cast<Eigen::Index>(b ^ m.x)] += (std::popcount(b & m.z) & 1) ? -v : v;
        }
    }
}

std::vector<PauliMasks> term_masks(const QubitHamiltonian& h) {
    std::vector<PauliMasks> out;
    for (const Term& t : h.terms) {
        out.push_back(pauli_masks(t.pauli));
    }
    return out;
}

double dense_ground_energy(const QubitHamiltonian& h) {
    const auto size = Eigen::Index{1} << h.num_qubits;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(size, size);
    for (const Term& t : h.terms) {
        PauliMasks pm = pauli_masks(t.pauli);
        const Amplitude c = t.coefficient * pm.phase;
        for (Eigen::Index b = 0; b < size; ++b) {
            auto ub = static_cast<uint64_t>(b);
            m(static_cast<Eigen::Index>(ub ^ pm.x), b) += (std::popcount(ub & pm.z) & 1) ? -c : c;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("dense eigensolver failed");
    }
    return solver.eigenvalues()(0) + h.offset;
}

}  // namespace

double lanczos_ground_energy(const QubitHamiltonian& h, double tol, size_t max_iter) {
    check_size(h);
    if (h.terms.empty()) {
        return h.offset;
    }
    const auto size = Eigen::Index{1} << h.num_qubits;
    const auto masks = term_masks(h);
    const size_t steps = std::min<size_t>(max_iter, static_cast<size_t>(size));

    std::mt19937_64 rng(0x5eed);
    std::normal_distribution<double> normal;
    CVec v(size);
    for (Eigen::Index i = 0; i < size; ++i) {
        v[i] = Amplitude(normal(rng), normal(rng));
    }
    v.normalize();

    std::vector<CVec> basis;
    std::vector<double> alpha;
    std::vector<double> beta;
    CVec w(size);
    double theta = 0;
    for (size_t j = 0; j < steps; ++j) {
        basis.push_back(v);
        matvec(h, masks, v, w);
        alpha.push_back(v.dot(w).real());
        // Full reorthogonalization, applied twice for stability.
        for (int pass = 0; pass < 2; ++pass) {
            for (const CVec& q : basis) {
                w -= q.dot(w) * q;
            }
        }
        double b = w.norm();

        const auto k = static_cast<Eigen::Index>(alpha.size());
        Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), k);
        Eigen::VectorXd sub = k > 1 ? Eigen::VectorXd(Eigen::Map<Eigen::VectorXd>(beta.data(), k - 1))
                                    : Eigen::VectorXd(0);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
        tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        theta = tri.eigenvalues()(0);
        double residual = b * std::abs(tri.eigenvectors()(k - 1, 0));
        if (residual <= tol * std::max(1.0, std::abs(theta)) || b <= 1e-14) {
            return theta + h.offset;
        }
        beta.push_back(b);
        v = w / b;
    }
    if (steps == static_cast<size_t>(size)) {
        return theta + h.offset;
    }
    throw std::runtime_error("Lanczos did not converge in " + std::to_string(steps) + " steps");
}

double fci_energy(const QubitHamiltonian& h) {
    check_size(h);
    if (h.num_qubits <= MAX_DENSE_FCI_QUBITS) {
        return dense_ground_energy(h);
    }
    return lanczos_ground_energy(h);
}

}  // namespace hgsa
