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
#include <span>
#include <string>
#include <vector>

#include "hgsa/ansatz.h"
#include "hgsa/optimizer.h"

namespace hgsa {

enum class GradientMethod { Adjoint, FiniteDifference };

const char* to_string(GradientMethod method);
/// "adjoint" or "fd"; throws std::invalid_argument otherwise.
GradientMethod gradient_method_from_string(const std::string& name);

struct VqeOptions {
    BfgsOptions bfgs;
    GradientMethod gradient = GradientMethod::Adjoint;
    double fd_step = 1e-4;
    double gamma = 1e-6;
};

struct VqeRun {
    uint64_t seed = 0;
    std::vector<double> theta;
    double energy = 0;
    /// Lowest energy seen at any evaluation, line-search probes included.
    double min_evaluated_energy = 0;
    OptimizationTrace trace;
};

/// init_params with `seed`, then BFGS on the ansatz energy.
VqeRun run_vqe(const AnsatzPlan& plan, const QubitHamiltonian& h, uint64_t seed, const VqeOptions& options = {});

/// The optimizer interface for one plan; the objective lives in `objective`.
ValueAndGradient make_value_and_gradient(AnsatzObjective& objective, GradientMethod method, double fd_step);

}  // namespace hgsa
