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

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace hgsa {

namespace {

using Vec = Eigen::VectorXd;

struct Sample {
    double a = 0;
    double f = 0;
    double d = 0;
    Vec x;
    Vec g;
};

class Evaluator {
   public:
    Evaluator(const ValueAndGradient& f, size_t n) : f_(f), n_(n) {}

    Sample at(const Vec& x0, const Vec& p, double a) {
        Sample s;
        s.a = a;
        s.x = x0 + a * p;
        s.g.resize(static_cast<Eigen::Index>(n_));
        s.f = f_(std::span<const double>(s.x.data(), n_), std::span<double>(s.g.data(), n_));
        s.d = s.g.dot(p);
        ++count;
        return s;
    }

    size_t count = 0;

   private:
    const ValueAndGradient& f_;
    size_t n_;
};

bool finite(const Sample& s) {
    return std::isfinite(s.f) && s.g.allFinite();
}

// Minimizer of the cubic through (a, fa, da) and (b, fb, db), if it is real.
std::optional<double> cubic_min(double a, double fa, double da, double b, double fb, double db) {
    double d1 = da + db - 3 * (fa - fb) / (a - b);
    double disc = d1 * d1 - da * db;
    if (disc < 0) {
        return std::nullopt;
    }
    double d2 = std::copysign(std::sqrt(disc), b - a);
    double denom = db - da + 2 * d2;
    if (denom == 0) {
        return std::nullopt;
    }
    double t = b - (b - a) * (db + d2 - d1) / denom;
    if (!std::isfinite(t)) {
        return std::nullopt;
    }
    return t;
}

struct LineSearch {
    Evaluator& eval;
    const Vec& x0;
    const Vec& p;
    const Sample& start;
    const BfgsOptions& opt;
    size_t budget;
    Sample best;

    bool armijo(const Sample& s) const { return s.f <= start.f + opt.c1 * s.a * start.d; }
    bool curvature(const Sample& s) const { return std::abs(s.d) <= -opt.c2 * start.d; }

    Sample probe(double a) {
        --budget;
        Sample s = eval.at(x0, p, a);
        if (finite(s) && s.f < best.f) {
            best = s;
        }
        return s;
    }

    std::optional<Sample> zoom(Sample lo, Sample hi) {
        while (budget > 0) {
            double width = hi.a - lo.a;
            if (std::abs(width) <= 1e-14 * std::max(1.0, std::abs(lo.a))) {
                return std::nullopt;
            }
            double a = lo.a + width / 2;
            if (auto t = cubic_min(lo.a, lo.f, lo.d, hi.a, hi.f, hi.d)) {
                double lo_edge = std::min(lo.a, hi.a) + 0.1 * std::abs(width);
                double hi_edge = std::max(lo.a, hi.a) - 0.1 * std::abs(width);
                if (*t >= lo_edge && *t <= hi_edge) {
                    a = *t;
                }
            }
            Sample s = probe(a);
            if (!finite(s)) {
                hi = s;
                hi.f = std::numeric_limits<double>::infinity();
                hi.d = 0;
                continue;
            }
            if (!armijo(s) || s.f >= lo.f) {
                hi = s;
            } else {
                if (curvature(s)) {
                    return s;
                }
                if (s.d * (hi.a - lo.a) >= 0) {
                    hi = lo;
                }
                lo = s;
            }
        }
        return std::nullopt;
    }

    std::optional<Sample> run(double a1) {
        Sample prev = start;
        double a = a1;
        for (size_t i = 0; budget > 0; ++i) {
            Sample s = probe(a);
            if (!finite(s)) {
                // Back off towards the last finite point.
                a = prev.a + (a - prev.a) / 4;
                continue;
            }
            if (!armijo(s) || (i > 0 && s.f >= prev.f)) {
                return zoom(prev, s);
            }
            if (curvature(s)) {
                return s;
            }
            if (s.d >= 0) {
                return zoom(s, prev);
            }
            prev = s;
            a *= 2;
        }
        return std::nullopt;
    }
};

}  // namespace

const char* to_string(OptimizerStatus status) {
    switch (status) {
        case OptimizerStatus::GradientConverged:
            return "gradient_converged";
        case OptimizerStatus::EnergyConverged:
            return "energy_converged";
        case OptimizerStatus::MaxIterations:
            return "max_iterations";
        case OptimizerStatus::LineSearchFailed:
            return "line_search_failed";
        case OptimizerStatus::NonFinite:
            return "non_finite";
    }
    return "unknown";
}

OptimizeResult minimize_bfgs(const ValueAndGradient& f, std::vector<double> x0, const BfgsOptions& options) {
    const auto t0 = std::chrono::steady_clock::now();
    const size_t n = x0.size();
    const auto dim = static_cast<Eigen::Index>(n);
    Evaluator eval(f, n);

    OptimizeResult result;
    OptimizationTrace& trace = result.trace;
    auto finish = [&](const Sample& s, OptimizerStatus status) {
        result.x.assign(s.x.data(), s.x.data() + n);
        result.value = s.f;
        trace.status = status;
        trace.evaluations = eval.count;
        trace.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return result;
    };

    Vec origin = Eigen::Map<const Vec>(x0.data(), dim);
    Sample cur = eval.at(origin, Vec::Zero(dim), 0);
    trace.initial_energy = cur.f;
    trace.initial_grad_norm = n ? cur.g.lpNorm<Eigen::Infinity>() : 0;
    if (!finite(cur)) {
        return finish(cur, OptimizerStatus::NonFinite);
    }
    if (trace.initial_grad_norm < options.gtol) {
        return finish(cur, OptimizerStatus::GradientConverged);
    }

    Eigen::MatrixXd hinv = Eigen::MatrixXd::Identity(dim, dim);
    bool scaled = false;
    for (size_t iter = 1; iter <= options.max_iter; ++iter) {
        Vec p = -hinv * cur.g;
        if (cur.g.dot(p) >= 0) {
            hinv.setIdentity();
            scaled = false;
            p = -cur.g;
        }
        // Keep the very first trial step at most one radian per coordinate.
        double a1 = 1;
        if (!scaled) {
            a1 = std::min(1.0, 1.0 / p.lpNorm<Eigen::Infinity>());
        }
        Sample start = cur;
        start.a = 0;
        start.d = cur.g.dot(p);
        LineSearch ls{eval, cur.x, p, start, options, options.max_line_search, start};
        std::optional<Sample> next = ls.run(a1);
        if (!next) {
            Sample best = ls.best;
            if (best.f < cur.f) {
                trace.entries.push_back({iter, best.f, best.g.lpNorm<Eigen::Infinity>()});
                return finish(best, OptimizerStatus::LineSearchFailed);
            }
            return finish(cur, OptimizerStatus::LineSearchFailed);
        }

        Vec s = next->x - cur.x;
        Vec y = next->g - cur.g;
        double sy = s.dot(y);
        if (sy > 1e-300) {
            if (!scaled) {
                hinv *= sy / y.dot(y);
                scaled = true;
            }
            double rho = 1 / sy;
            Vec hy = hinv * y;
            double yhy = y.dot(hy);
            // H+ = (I - rho s y^T) H (I - rho y s^T) + rho s s^T, expanded.
            hinv.noalias() -= rho * (s * hy.transpose() + hy * s.transpose());
            hinv.noalias() += (rho * rho * yhy + rho) * (s * s.transpose());
        }

        double f_old = cur.f;
        cur = *next;
        double gnorm = cur.g.lpNorm<Eigen::Infinity>();
        trace.entries.push_back({iter, cur.f, gnorm});
        if (gnorm < options.gtol) {
            return finish(cur, OptimizerStatus::GradientConverged);
        }
        double scale = std::max({std::abs(f_old), std::abs(cur.f), 1.0});
        if (std::abs(f_old - cur.f) <= options.ftol * scale) {
            return finish(cur, OptimizerStatus::EnergyConverged);
        }
    }
    return finish(cur, OptimizerStatus::MaxIterations);
}

}  // namespace hgsa
