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

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace hgsa {

/// Returns f(x) and writes the gradient into the second argument.
using ValueAndGradient = std::function<double(std::span<const double>, std::span<double>)>;

struct BfgsOptions {
    size_t max_iter = 200;
    /// Stop when the gradient infinity norm drops below this.
    double gtol = 1e-6;
    /// Stop when |f_k - f_{k+1}| <= ftol * max(|f_k|, |f_{k+1}|, 1).
    double ftol = 1e-10;
    /// Strong Wolfe constants.
    double c1 = 1e-4;
    double c2 = 0.9;
    size_t max_line_search = 30;
};

enum class OptimizerStatus { GradientConverged, EnergyConverged, MaxIterations, LineSearchFailed, NonFinite };

const char* to_string(OptimizerStatus status);

struct TraceEntry {
    size_t iteration = 0;
    double energy = 0;
    double grad_norm = 0;
};

/// One entry per completed iteration; the starting point is kept apart.
struct OptimizationTrace {
    double initial_energy = 0;
    double initial_grad_norm = 0;
    std::vector<TraceEntry> entries;
    OptimizerStatus status = OptimizerStatus::MaxIterations;
    size_t evaluations = 0;
    double wall_seconds = 0;
};

struct OptimizeResult {
    std::vector<double> x;
    double value = 0;
    OptimizationTrace trace;
};

/// Quasi-Newton minimization with a dense inverse-Hessian BFGS update and a
/// strong Wolfe line search. Line-search failure ends the run with the best
/// point found so far rather than throwing.
OptimizeResult minimize_bfgs(const ValueAndGradient& f, std::vector<double> x0, const BfgsOptions& options = {});

}  // namespace hgsa
