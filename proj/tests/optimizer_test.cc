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

#include "hgsa/optimizer.h"

#include <gtest/gtest.h>

#include <cmath>

#include "hgsa/fci.h"
#include "hgsa/vqe.h"
#include "test_util.h"

using namespace hgsa;

namespace {

double bowl(std::span<const double> x, std::span<double> g) {
    g[0] = 2 * (x[0] - 1);
    g[1] = 20 * (x[1] + 2);
    return (x[0] - 1) * (x[0] - 1) + 10 * (x[1] + 2) * (x[1] + 2);
}

double rosenbrock(std::span<const double> x, std::span<double> g) {
    double a = 1 - x[0];
    double b = x[1] - x[0] * x[0];
    g[0] = -2 * a - 400 * x[0] * b;
    g[1] = 200 * b;
    return a * a + 100 * b * b;
}

void expect_monotone(const OptimizationTrace& t) {
    double prev = t.initial_energy;
    for (const TraceEntry& e : t.entries) {
        EXPECT_LE(e.energy, prev);
        prev = e.energy;
    }
}

}  // namespace

TEST(optimizer, quadratic_bowl) {
    BfgsOptions opt;
    opt.gtol = 1e-10;
    opt.ftol = 0;
    OptimizeResult r = minimize_bfgs(bowl, {5.0, 5.0}, opt);
    EXPECT_LT(r.trace.entries.size(), 20u);
    EXPECT_NEAR(r.x[0], 1, 1e-8);
    EXPECT_NEAR(r.x[1], -2, 1e-8);
    EXPECT_NEAR(r.value, 0, 1e-8);
    EXPECT_EQ(r.trace.status, OptimizerStatus::GradientConverged);
    expect_monotone(r.trace);
}

TEST(optimizer, rosenbrock) {
    BfgsOptions opt;
    opt.ftol = 0;
    OptimizeResult r = minimize_bfgs(rosenbrock, {-1.2, 1.0}, opt);
    EXPECT_NEAR(r.x[0], 1, 1e-5);
    EXPECT_NEAR(r.x[1], 1, 1e-5);
    expect_monotone(r.trace);
    EXPECT_LE(r.trace.entries.size(), opt.max_iter);
}

TEST(optimizer, iteration_cap) {
    BfgsOptions opt;
    opt.max_iter = 3;
    opt.ftol = 0;
    OptimizeResult r = minimize_bfgs(rosenbrock, {-1.2, 1.0}, opt);
    EXPECT_EQ(r.trace.status, OptimizerStatus::MaxIterations);
    EXPECT_EQ(r.trace.entries.size(), 3u);
}

TEST(optimizer, already_converged_start) {
    OptimizeResult r = minimize_bfgs(bowl, {1.0, -2.0});
    EXPECT_EQ(r.trace.status, OptimizerStatus::GradientConverged);
    EXPECT_TRUE(r.trace.entries.empty());
}

TEST(optimizer, wrong_gradient_ends_in_line_search_failure) {
    // The reported gradient points uphill, so no step along -g decreases f.
    auto bad = [](std::span<const double> x, std::span<double> g) {
        g[0] = -2 * x[0];
        return x[0] * x[0];
    };
    OptimizeResult r = minimize_bfgs(bad, {1.0});
    EXPECT_EQ(r.trace.status, OptimizerStatus::LineSearchFailed);
    EXPECT_LE(r.value, 1.0);
}

TEST(optimizer, non_finite_start) {
    auto nan = [](std::span<const double>, std::span<double> g) {
        g[0] = 0;
        return std::nan("");
    };
    EXPECT_EQ(minimize_bfgs(nan, {0.0}).trace.status, OptimizerStatus::NonFinite);
}

TEST(optimizer, status_names) {
    EXPECT_STREQ(to_string(OptimizerStatus::EnergyConverged), "energy_converged");
    EXPECT_STREQ(to_string(OptimizerStatus::LineSearchFailed), "line_search_failed");
}

TEST(vqe, h2_reaches_chemical_accuracy_for_five_seeds) {
    QubitHamiltonian h = testutil::load_fixture("h2_0.74.ham");
    AnsatzPlan plan = build_ansatz(h);
    double fci = fci_energy(h);
    for (uint64_t seed = 0; seed < 5; ++seed) {
        VqeRun run = run_vqe(plan, h, seed);
        EXPECT_LE(std::abs(run.energy - fci), 1e-3) << "seed " << seed;
        EXPECT_GE(run.min_evaluated_energy, fci - 1e-9);
        EXPECT_LE(run.trace.entries.size(), 200u);
        expect_monotone(run.trace);
    }
}

TEST(vqe, runs_are_deterministic) {
    QubitHamiltonian h = testutil::load_fixture("lih_1.6.ham");
    AnsatzPlan plan = build_ansatz(h);
    VqeOptions opt;
    opt.bfgs.max_iter = 20;
    VqeRun a = run_vqe(plan, h, 7, opt);
    VqeRun b = run_vqe(plan, h, 7, opt);
    EXPECT_EQ(a.theta, b.theta);
    ASSERT_EQ(a.trace.entries.size(), b.trace.entries.size());
    for (size_t k = 0; k < a.trace.entries.size(); ++k) {
        EXPECT_EQ(a.trace.entries[k].energy, b.trace.entries[k].energy);
    }
}

TEST(vqe, finite_difference_gradient_path) {
    QubitHamiltonian h = testutil::load_fixture("h2_0.74.ham");
    AnsatzPlan plan = build_ansatz(h);
    VqeOptions opt;
    opt.gradient = GradientMethod::FiniteDifference;
    VqeRun run = run_vqe(plan, h, 1, opt);
    EXPECT_LE(std::abs(run.energy - fci_energy(h)), 1e-3);
    EXPECT_EQ(gradient_method_from_string("fd"), GradientMethod::FiniteDifference);
    EXPECT_THROW(gradient_method_from_string("shift"), std::invalid_argument);
}
