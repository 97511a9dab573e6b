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

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "hgsa/circuit.h"
#include "hgsa/graph_synth.h"
#include "hgsa/grouping.h"
#include "hgsa/simulator.h"
#include "hgsa/stabilizer.h"

namespace hgsa {

/// One commuting group turned into a diagonalizer.
struct AnsatzBlock {
    size_t group_id = 0;
    /// U_z^dagger P U_z is diagonal for every member P.
    Circuit uz;
    Circuit uz_dagger;
    /// Completed, sign-fixed generators; they stabilize U_z |hf>.
    StabilizerTableau tableau;
    GraphForm graph;
};

/// Blocks act in list order on |hf>, each as U_z^dagger, then a layer of
/// single-qubit rotations, then U_z. The whole list repeats `layers` times.
struct AnsatzPlan {
    size_t num_qubits = 0;
    std::string hf;
    GroupedHamiltonian grouping;
    std::vector<AnsatzBlock> blocks;
    size_t layers = 1;

    /// 3 * n * blocks * layers.
    size_t num_parameters() const;
    /// Index of (layer, block, qubit, angle) with angle 0, 1, 2 for alpha, beta, gamma.
    size_t parameter_index(size_t layer, size_t block, size_t qubit, size_t angle) const;
};

/// partition, then per group: independent_generators, complete_generators,
/// to_graph_form, build_diagonalizer, verify_diagonalization and sign_fix.
/// Failures are rethrown as std::logic_error prefixed with the group id.
AnsatzPlan build_ansatz(const QubitHamiltonian& h, size_t layers = 1, GroupOrder order = GroupOrder::Descending);

/// alpha and beta uniform in [0, 2pi) from a 64-bit Mersenne twister seeded
/// with `seed`; every gamma equals `gamma`.
std::vector<double> init_params(const AnsatzPlan& plan, uint64_t seed, double gamma = 1e-6);

/// The full ansatz as one circuit with the angles of `theta` bound. Each qubit
/// of a block gets Rz(-a) Ry(-b) Rz(g) Ry(b) Rz(a) in time order.
Circuit ansatz_circuit(const AnsatzPlan& plan, std::span<const double> theta);

/// The prepared state |psi(theta)>.
StateVector prepare_state(const AnsatzPlan& plan, std::span<const double> theta);

/// <psi(theta)|H|psi(theta)>, term by term.
double energy(const AnsatzPlan& plan, std::span<const double> theta, const QubitHamiltonian& h);

/// Fast evaluation of the ansatz energy with an exact reverse-mode gradient.
/// Keeps scratch buffers, so one instance serves one thread.
class AnsatzObjective {
   public:
    AnsatzObjective(const AnsatzPlan& plan, const QubitHamiltonian& h);

    size_t num_parameters() const { return num_parameters_; }
    double value(std::span<const double> theta);
    /// Writes dE/dtheta into `grad` and returns E.
    double value_and_gradient(std::span<const double> theta, std::span<double> grad);

    size_t evaluations() const { return evaluations_; }
    /// Lowest energy returned so far.
    double min_energy() const { return min_energy_; }

   private:
    struct Op {
        Gate gate;
        /// -1 for a fixed gate; otherwise angle = scale * theta[param].
        int64_t param = -1;
        double scale = 0;
    };

    void prepare(std::span<const double> theta);
    double record(double e);

    size_t num_qubits_;
    std::string hf_;
    size_t num_parameters_;
    std::vector<Op> ops_;
    CompiledHamiltonian compiled_;
    StateVector psi_;
    StateVector lambda_;
    size_t evaluations_ = 0;
    double min_energy_ = std::numeric_limits<double>::infinity();
};

}  // namespace hgsa
