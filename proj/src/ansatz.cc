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

#include "hgsa/ansatz.h"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace hgsa {

namespace {

void check_theta(const AnsatzPlan& plan, std::span<const double> theta) {
    if (theta.size() != plan.num_parameters()) {
        throw std::invalid_argument("parameter vector has " + std::to_string(theta.size()) + " entries, plan needs " +
                                    std::to_string(plan.num_parameters()));
    }
    for (double v : theta) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("parameter vector has a non-finite entry");
        }
    }
}

// Rotation slots of one qubit in time order: (kind, angle index, sign).
struct Slot {
    GateKind kind;
    size_t angle;
    double sign;
};
constexpr Slot ROTATION_SLOTS[5] = {
    {GateKind::RZ, 0, -1}, {GateKind::RY, 1, -1}, {GateKind::RZ, 2, 1}, {GateKind::RY, 1, 1}, {GateKind::RZ, 0, 1},
};

// Walks the ansatz in time order. emit(gate, param, scale) gets param = -1 for
// fixed Clifford gates.
template <typename F>
void walk(const AnsatzPlan& plan, F&& emit) {
    for (size_t layer = 0; layer < plan.layers; ++layer) {
        for (size_t b = 0; b < plan.blocks.size(); ++b) {
            const AnsatzBlock& block = plan.blocks[b];
            for (const Gate& g : block.uz_dagger.gates()) {
                emit(g, int64_t{-1}, 0.0);
            }
            for (size_t q = 0; q < plan.num_qubits; ++q) {
                for (const Slot& s : ROTATION_SLOTS) {
                    Gate g{s.kind, {static_cast<uint32_t>(q), static_cast<uint32_t>(q)}, 0};
                    emit(g, static_cast<int64_t>(plan.parameter_index(layer, b, q, s.angle)), s.sign);
                }
            }
            for (const Gate& g : block.uz.gates()) {
                emit(g, int64_t{-1}, 0.0);
            }
        }
    }
}

}  // namespace

size_t AnsatzPlan::num_parameters() const {
    return 3 * num_qubits * blocks.size() * layers;
}

size_t AnsatzPlan::parameter_index(size_t layer, size_t block, size_t qubit, size_t angle) const {
    return ((layer * blocks.size() + block) * num_qubits + qubit) * 3 + angle;
}

AnsatzPlan build_ansatz(const QubitHamiltonian& h, size_t layers, GroupOrder order) {
    if (layers < 1) {
        throw std::invalid_argument("layers must be at least 1");
    }
    check_bitstring(h.hf, h.num_qubits);
    AnsatzPlan plan;
    plan.num_qubits = h.num_qubits;
    plan.hf = h.hf;
    plan.layers = layers;
    plan.grouping = partition(h, order);
    for (size_t k = 0; k < plan.grouping.groups.size(); ++k) {
        const CommutingGroup& group = plan.grouping.groups[k];
        try {
            StabilizerTableau full = complete_generators(independent_generators(group));
            AnsatzBlock block;
            block.group_id = k;
            block.graph = to_graph_form(full);
            block.uz = build_diagonalizer(block.graph);
            block.uz_dagger = block.uz.inverse();
            if (!verify_diagonalization(block.uz, group)) {
                throw std::logic_error("diagonalizer does not diagonalize every member");
            }
            block.tableau = sign_fix(full, block.uz, h.hf);
            plan.blocks.push_back(std::move(block));
        } catch (const std::exception& e) {
            throw std::logic_error("group " + std::to_string(k) + ": " + e.what());
        }
    }
    return plan;
}

std::vector<double> init_params(const AnsatzPlan& plan, uint64_t seed, double gamma) {
    std::mt19937_64 rng(seed);
    // 53 random bits scaled into [0, 1), independent of the library's distributions.
    auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2 * std::numbers::pi; };
    std::vector<double> theta(plan.num_parameters());
    for (size_t k = 0; k < theta.size(); k += 3) {
        theta[k] = uniform();
        theta[k + 1] = uniform();
        theta[k + 2] = gamma;
    }
    return theta;
}

Circuit ansatz_circuit(const AnsatzPlan& plan, std::span<const double> theta) {
    check_theta(plan, theta);
    Circuit c(plan.num_qubits);
    walk(plan, [&](Gate g, int64_t param, double scale) {
        if (param >= 0) {
            g.angle = scale * theta[static_cast<size_t>(param)];
        }
        c.append(g);
    });
    return c;
}

StateVector prepare_state(const AnsatzPlan& plan, std::span<const double> theta) {
    check_theta(plan, theta);
    StateVector s = StateVector::basis(plan.num_qubits, plan.hf);
    walk(plan, [&](Gate g, int64_t param, double scale) {
        if (param >= 0) {
            g.angle = scale * theta[static_cast<size_t>(param)];
        }
        s.apply(g);
    });
    return s;
}

double energy(const AnsatzPlan& plan, std::span<const double> theta, const QubitHamiltonian& h) {
    if (h.num_qubits != plan.num_qubits) {
        throw std::invalid_argument("Hamiltonian and plan sizes differ");
    }
    return expectation(prepare_state(plan, theta), h);
}

AnsatzObjective::AnsatzObjective(const AnsatzPlan& plan, const QubitHamiltonian& h)
    : num_qubits_(plan.num_qubits),
      hf_(plan.hf),
      num_parameters_(plan.num_parameters()),
      compiled_(h),
      psi_(plan.num_qubits),
      lambda_(plan.num_qubits) {
    if (h.num_qubits != plan.num_qubits) {
        throw std::invalid_argument("Hamiltonian and plan sizes differ");
    }
    walk(plan, [&](const Gate& g, int64_t param, double scale) { ops_.push_back(Op{g, param, scale}); });
}

void AnsatzObjective::prepare(std::span<const double> theta) {
    if (theta.size() != num_parameters_) {
        throw std::invalid_argument("parameter vector has " + std::to_string(theta.size()) + " entries, plan needs " +
                                    std::to_string(num_parameters_));
    }
    psi_ = StateVector::basis(num_qubits_, hf_);
    for (const Op& op : ops_) {
        if (op.param < 0) {
            psi_.apply(op.gate);
        } else {
            Gate g = op.gate;
            g.angle = op.scale * theta[static_cast<size_t>(op.param)];
            psi_.apply(g);
        }
    }
}

double AnsatzObjective::record(double e) {
    ++evaluations_;
    if (e < min_energy_) {
        min_energy_ = e;
    }
    return e;
}

double AnsatzObjective::value(std::span<const double> theta) {
    prepare(theta);
    return record(compiled_.expectation(psi_.amplitudes()));
}

double AnsatzObjective::value_and_gradient(std::span<const double> theta, std::span<double> grad) {
    if (grad.size() != num_parameters_) {
        throw std::invalid_argument("gradient buffer has the wrong size");
    }
    prepare(theta);
    double e = compiled_.expectation(psi_.amplitudes());
    compiled_.apply(psi_.amplitudes(), lambda_.amplitudes());
    std::fill(grad.begin(), grad.end(), 0.0);

    // Reverse sweep: psi holds the state right after op k, lambda the costate
    // G_{k+1}^dagger ... G_K^dagger H |psi>. For G = exp(-i a sigma / 2),
    // dE/da = Im <lambda|sigma|psi>.
    const size_t size = psi_.size();
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
        Gate g = it->gate;
        if (it->param >= 0) {
            g.angle = it->scale * theta[static_cast<size_t>(it->param)];
            const size_t bit = size_t{1} << g.qubits[0];
            double acc = 0;
            if (g.kind == GateKind::RZ) {
                for (size_t b = 0; b < size; ++b) {
                    double v = (std::conj(lambda_[b]) * psi_[b]).imag();
                    acc += (b & bit) ? -v : v;
                }
            } else {
                // Y|0> = i|1>, Y|1> = -i|0>, so Im <l|Y|p> over a pair is
                // Re(conj(l1) p0) - Re(conj(l0) p1).
                for (size_t b = 0; b < size; ++b) {
                    if (b & bit) {
                        continue;
                    }
                    size_t b1 = b | bit;
                    acc += (std::conj(lambda_[b1]) * psi_[b]).real() - (std::conj(lambda_[b]) * psi_[b1]).real();
                }
            }
            grad[static_cast<size_t>(it->param)] += it->scale * acc;
        }
        Gate inv{adjoint_kind(g.kind), g.qubits, -g.angle};
        psi_.apply(inv);
        lambda_.apply(inv);
    }
    return record(e);
}

}  // namespace hgsa
