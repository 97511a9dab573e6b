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

#include <gtest/gtest.h>

#include <numbers>

#include "hgsa/dense.h"
#include "hgsa/fci.h"
#include "test_util.h"

using namespace hgsa;

namespace {

std::vector<double> random_theta(const AnsatzPlan& plan, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
    std::vector<double> theta(plan.num_parameters());
    for (double& t : theta) {
        t = u(rng);
    }
    return theta;
}

double hf_energy(const QubitHamiltonian& h) {
    return expectation(StateVector::basis(h.num_qubits, h.hf), h);
}

}  // namespace

TEST(ansatz, parameter_layout) {
    QubitHamiltonian h = testutil::load_fixture("h2_0.74.ham");
    AnsatzPlan plan = build_ansatz(h, 2);
    EXPECT_EQ(plan.blocks.size(), 2u);
    EXPECT_EQ(plan.num_parameters(), 3u * 4 * 2 * 2);
    EXPECT_EQ(plan.parameter_index(0, 0, 0, 0), 0u);
    EXPECT_EQ(plan.parameter_index(0, 0, 1, 2), 5u);
    EXPECT_EQ(plan.parameter_index(0, 1, 0, 0), 12u);
    EXPECT_EQ(plan.parameter_index(1, 0, 0, 0), 24u);
    EXPECT_THROW(build_ansatz(h, 0), std::invalid_argument);
}

TEST(ansatz, h2_plan_is_small) {
    AnsatzPlan plan = build_ansatz(testutil::load_fixture("h2_0.74.ham"));
    size_t two_qubit = 0;
    for (const AnsatzBlock& b : plan.blocks) {
        two_qubit += b.uz.two_qubit_count() + b.uz_dagger.two_qubit_count();
        EXPECT_EQ(b.uz_dagger.gates().size(), b.uz.gates().size());
    }
    EXPECT_LE(two_qubit, 8u);
}

TEST(ansatz, single_term_plan) {
    AnsatzPlan plan = build_ansatz(testutil::load_fixture("synthetic/z0.ham"));
    ASSERT_EQ(plan.blocks.size(), 1u);
    EXPECT_EQ(plan.blocks[0].uz.two_qubit_count(), 0u);
    EXPECT_EQ(plan.num_parameters(), 3u);
}

TEST(ansatz, empty_hamiltonian_plan) {
    QubitHamiltonian h = testutil::load_fixture("synthetic/empty.ham");
    AnsatzPlan plan = build_ansatz(h);
    EXPECT_TRUE(plan.blocks.empty());
    EXPECT_EQ(plan.num_parameters(), 0u);
    EXPECT_DOUBLE_EQ(energy(plan, {}, h), h.offset);
}

TEST(ansatz, init_is_deterministic_and_in_range) {
    AnsatzPlan plan = build_ansatz(testutil::load_fixture("lih_1.6.ham"));
    auto a = init_params(plan, 42);
    auto b = init_params(plan, 42);
    auto c = init_params(plan, 43);
    EXPECT_EQ(a, b);
    EXPECT_NE(a, c);
    for (size_t k = 0; k < a.size(); k += 3) {
        EXPECT_GE(a[k], 0);
        EXPECT_LT(a[k], 2 * std::numbers::pi);
        EXPECT_GE(a[k + 1], 0);
        EXPECT_LT(a[k + 1], 2 * std::numbers::pi);
        EXPECT_EQ(a[k + 2], 1e-6);
    }
}

TEST(ansatz, zero_gamma_blocks_are_identity) {
    QubitHamiltonian h = testutil::load_fixture("h2_0.74.ham");
    AnsatzPlan plan = build_ansatz(h, 2);
    auto theta = init_params(plan, 3, 0.0);
    Eigen::MatrixXcd u = dense::circuit_matrix(ansatz_circuit(plan, theta));
    EXPECT_LT((u - Eigen::MatrixXcd::Identity(16, 16)).norm(), 1e-12);
    EXPECT_NEAR(energy(plan, theta, h), hf_energy(h), 1e-12);
}

TEST(ansatz, identity_init_energy_is_hf) {
    for (const auto& path : testutil::molecule_fixtures()) {
        QubitHamiltonian h = load_hamiltonian(path);
        AnsatzPlan plan = build_ansatz(h);
        double hf = hf_energy(h);
        EXPECT_NEAR(energy(plan, init_params(plan, 0), h), hf, 1e-6) << path;
        EXPECT_NEAR(energy(plan, init_params(plan, 0, 0.0), h), hf, 1e-10) << path;
    }
}

TEST(ansatz, state_matches_dense_circuit) {
    QubitHamiltonian h = testutil::load_fixture("h2_1.ham");
    AnsatzPlan plan = build_ansatz(h);
    std::mt19937_64 rng(21);
    auto theta = random_theta(plan, rng);
    Eigen::MatrixXcd u = dense::circuit_matrix(ansatz_circuit(plan, theta));
    StateVector s = prepare_state(plan, theta);
    Eigen::Index hf_index = 1;  // "1000": qubit 0 set.
    for (size_t i = 0; i < s.size(); ++i) {
        ASSERT_NEAR(std::abs(s[i] - u(static_cast<Eigen::Index>(i), hf_index)), 0, 1e-12);
    }
}

TEST(ansatz, rotation_is_five_gate_product) {
    // One qubit, one diagonal block: U_z is a single H layer, so the rotation
    // sits between H gates.
    AnsatzPlan plan = build_ansatz(testutil::load_fixture("synthetic/z0.ham"));
    std::vector<double> theta{0.3, 1.1, 0.7};
    Circuit c = ansatz_circuit(plan, theta);
    Circuit r(1);
    r.rotation(GateKind::RZ, 0, -0.3);
    r.rotation(GateKind::RY, 0, -1.1);
    r.rotation(GateKind::RZ, 0, 0.7);
    r.rotation(GateKind::RY, 0, 1.1);
    r.rotation(GateKind::RZ, 0, 0.3);
    Eigen::Matrix2cd v = dense::single_qubit_matrix(GateKind::RZ, 0.3) * dense::single_qubit_matrix(GateKind::RY, 1.1);
    Eigen::Matrix2cd expected = v * dense::single_qubit_matrix(GateKind::RZ, 0.7) * v.adjoint();
    EXPECT_LT((dense::circuit_matrix(r) - expected).norm(), 1e-12);
    Eigen::MatrixXcd uz = dense::circuit_matrix(plan.blocks[0].uz);
    EXPECT_LT((dense::circuit_matrix(c) - uz * expected * uz.adjoint()).norm(), 1e-12);
}

TEST(ansatz, objective_matches_energy) {
    QubitHamiltonian h = testutil::load_fixture("lih_1.6.ham");
    AnsatzPlan plan = build_ansatz(h);
    AnsatzObjective obj(plan, h);
    std::mt19937_64 rng(22);
    auto theta = random_theta(plan, rng);
    EXPECT_NEAR(obj.value(theta), energy(plan, theta, h), 1e-11);
    EXPECT_EQ(obj.evaluations(), 1u);
    EXPECT_THROW(obj.value(std::vector<double>(3)), std::invalid_argument);
}

TEST(ansatz, adjoint_gradient_matches_finite_differences) {
    for (const char* name : {"h2_0.74.ham", "lih_2.2.ham"}) {
        QubitHamiltonian h = testutil::load_fixture(name);
        AnsatzPlan plan = build_ansatz(h, 2);
        AnsatzObjective obj(plan, h);
        std::mt19937_64 rng(23);
        auto theta = random_theta(plan, rng);
        std::vector<double> grad(theta.size());
        double e = obj.value_and_gradient(theta, grad);
        EXPECT_NEAR(e, energy(plan, theta, h), 1e-11);
        auto fd = gradient([&](std::span<const double> x) { return obj.value(x); }, theta, 1e-4);
        for (size_t k = 0; k < grad.size(); ++k) {
            ASSERT_NEAR(grad[k], fd[k], 1e-7) << name << " parameter " << k;
        }
    }
}

TEST(ansatz, finite_differences_match_richardson) {
    QubitHamiltonian h = testutil::load_fixture("h2_0.74.ham");
    AnsatzPlan plan = build_ansatz(h);
    std::mt19937_64 rng(24);
    auto theta = random_theta(plan, rng);
    auto f = [&](std::span<const double> x) { return energy(plan, x, h); };
    auto g1 = gradient(f, theta, 1e-2);
    auto g2 = gradient(f, theta, 5e-3);
    auto fd = gradient(f, theta, 1e-4);
    for (size_t k = 0; k < fd.size(); ++k) {
        double richardson = (4 * g2[k] - g1[k]) / 3;
        EXPECT_NEAR(fd[k], richardson, 1e-5);
    }
}

TEST(ansatz, random_parameters_respect_variational_bound) {
    for (const char* name : {"h2_0.74.ham", "lih_1.6.ham", "h4_1.ham"}) {
        QubitHamiltonian h = testutil::load_fixture(name);
        AnsatzPlan plan = build_ansatz(h);
        double fci = fci_energy(h);
        std::mt19937_64 rng(25);
        for (int trial = 0; trial < 10; ++trial) {
            EXPECT_GE(energy(plan, random_theta(plan, rng), h), fci - 1e-9) << name;
        }
    }
}

TEST(ansatz, sign_fixed_projector_fixes_reference) {
    for (const char* name : {"h2_0.5.ham", "h2_0.74.ham", "h2_2.5.ham"}) {
        QubitHamiltonian h = testutil::load_fixture(name);
        AnsatzPlan plan = build_ansatz(h);
        Eigen::VectorXcd hf = Eigen::VectorXcd::Zero(16);
        hf[1] = 1;
        for (const AnsatzBlock& b : plan.blocks) {
            Eigen::VectorXcd psi = dense::circuit_matrix(b.uz) * hf;
            Eigen::MatrixXcd proj = Eigen::MatrixXcd::Identity(16, 16);
            for (const PauliString& r : b.tableau.rows()) {
                proj = proj * 0.5 * (Eigen::MatrixXcd::Identity(16, 16) + dense::pauli_matrix(r));
            }
            EXPECT_LT((proj * psi - psi).norm(), 1e-10) << name << " block " << b.group_id;
        }
    }
}
