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

#include "hgsa/vqe.h"

#include <algorithm>
#include <stdexcept>

#include "hgsa/simulator.h"

namespace hgsa {

const char* to_string(GradientMethod method) {
    return method == GradientMethod::Adjoint ? "adjoint" : "fd";
}

GradientMethod gradient_method_from_string(const std::string& name) {
    if (name == "adjoint") {
        return GradientMethod::Adjoint;
    }
    if (name == "fd") {
        return GradientMethod::FiniteDifference;
    }
    throw std::invalid_argument("unknown gradient method '" + name + "' (expected adjoint or fd)");
}

ValueAndGradient make_value_and_gradient(AnsatzObjective& objective, GradientMethod method, double fd_step) {
    if (method == GradientMethod::Adjoint) {
        return [&objective](std::span<const double> x, std::span<double> g) {
            return objective.value_and_gradient(x, g);
        };
    }
    return [&objective, fd_step](std::span<const double> x, std::span<double> g) {
        double e = objective.value(x);
        std::vector<double> fd =
            gradient([&objective](std::span<const double> y) { return objective.value(y); }, x, fd_step);
        std::copy(fd.begin(), fd.end(), g.begin());
        return e;
    };
}

VqeRun run_vqe(const AnsatzPlan& plan, const QubitHamiltonian& h, uint64_t seed, const VqeOptions& options) {
    AnsatzObjective objective(plan, h);
    VqeRun run;
    run.seed = seed;
    OptimizeResult r = minimize_bfgs(make_value_and_gradient(objective, options.gradient, options.fd_step),
                                     init_params(plan, seed, options.gamma), options.bfgs);
    run.theta = std::move(r.x);
    run.energy = r.value;
    run.min_evaluated_energy = objective.min_energy();
    run.trace = std::move(r.trace);
    return run;
}

}  // namespace hgsa
