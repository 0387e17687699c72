// Copyright 2026 The qhdrg Authors
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


#include "qhdrg/fitting.h"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>

#include "qhdrg/rng.h"

namespace qhdrg {

std::vector<FitRow> fit_rows(std::span<const SuccessEstimate> estimates) {
    std::vector<FitRow> rows;
    rows.reserve(estimates.size());
    for (const auto &e : estimates) {
        rows.push_back({e.cell.L, e.cell.p, e.p_succ, e.std_error});
    }
    return rows;
}

namespace {

struct Nonlinear {
    double p_th, nu, mu;
};

struct Evaluation {
    Eigen::Vector4d beta;
    double rss;
};

Evaluation solve_linear(const std::vector<FitRow> &rows, const Nonlinear &q, double stderr_floor) {
    const auto n = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXd X(n, 4);
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; i++) {
        const FitRow &r = rows[i];
        const double w = 1.0 / std::max(r.std_error, stderr_floor);
        const double x = (r.p - q.p_th) * std::pow(r.L, 1.0 / q.nu);
        X.row(i) << w, w * x, w * x * x, w * std::pow(r.L, -1.0 / q.mu);
        y(i) = w * r.p_succ;
    }
    Evaluation ev;
    ev.beta = X.colPivHouseholderQr().solve(y);
    ev.rss = (X * ev.beta - y).squaredNorm();
    return ev;
}

struct Problem {
    const std::vector<FitRow> *rows;
    const FitOptions *opts;
    double p_lo, p_hi;

    Nonlinear clamp(const Nonlinear &q) const {
        return {std::clamp(q.p_th, p_lo, p_hi), std::clamp(q.nu, opts->nu_min, opts->nu_max),
                std::clamp(q.mu, opts->mu_min, opts->mu_max)};
    }

    // Out-of-bounds points are evaluated at the nearest feasible point plus a quadratic wall.
    double objective(const Nonlinear &q) const {
        const Nonlinear c = clamp(q);
        const double wall = std::pow((q.p_th - c.p_th) / (p_hi - p_lo), 2) + std::pow(q.nu - c.nu, 2) + std::pow(q.mu - c.mu, 2);
        const double rss = solve_linear(*rows, c, opts->stderr_floor).rss;
        return rss + 1e6 * wall;
    }
};

double gsl_objective(const gsl_vector *v, void *params) {
    const auto *problem = static_cast<const Problem *>(params);
    return problem->objective({gsl_vector_get(v, 0), gsl_vector_get(v, 1), gsl_vector_get(v, 2)});
}

struct SimplexResult {
    Nonlinear best;
    double value;
    std::size_t iterations;
};

SimplexResult nelder_mead(const Problem &problem, const Nonlinear &start, std::size_t max_iterations) {
    using Minimizer = std::unique_ptr<gsl_multimin_fminimizer, decltype(&gsl_multimin_fminimizer_free)>;
    using Vector = std::unique_ptr<gsl_vector, decltype(&gsl_vector_free)>;

    Vector x(gsl_vector_alloc(3), gsl_vector_free);
    Vector step(gsl_vector_alloc(3), gsl_vector_free);
    gsl_vector_set(x.get(), 0, start.p_th);
    gsl_vector_set(x.get(), 1, start.nu);
    gsl_vector_set(x.get(), 2, start.mu);
    gsl_vector_set(step.get(), 0, (problem.p_hi - problem.p_lo) / 4);
    gsl_vector_set(step.get(), 1, 0.25);
    gsl_vector_set(step.get(), 2, 0.5);

    gsl_multimin_function fn{&gsl_objective, 3, const_cast<Problem *>(&problem)};
    Minimizer m(gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 3), gsl_multimin_fminimizer_free);
    gsl_multimin_fminimizer_set(m.get(), &fn, x.get(), step.get());

    std::size_t it = 0;
    int status = GSL_CONTINUE;
    while (status == GSL_CONTINUE && it < max_iterations) {
        it++;
        if (gsl_multimin_fminimizer_iterate(m.get()) != GSL_SUCCESS) {
            break;
        }
        status = gsl_multimin_test_size(gsl_multimin_fminimizer_size(m.get()), 1e-10);
    }
    if (status != GSL_SUCCESS) {
        throw FitError(FitError::Kind::Convergence,
                       "threshold fit did not converge after " + std::to_string(it) + " iterations (simplex size " +
                           std::to_string(gsl_multimin_fminimizer_size(m.get())) + ", objective " +
                           std::to_string(gsl_multimin_fminimizer_minimum(m.get())) + ")");
    }
    const gsl_vector *b = gsl_multimin_fminimizer_x(m.get());
    return {{gsl_vector_get(b, 0), gsl_vector_get(b, 1), gsl_vector_get(b, 2)}, gsl_multimin_fminimizer_minimum(m.get()), it};
}

void check_design(const DataWindow &w) {
    std::set<int> Ls;
    std::set<double> ps;
    double lo = 1, hi = 0;
    for (const auto &r : w.rows) {
        Ls.insert(r.L);
        ps.insert(r.p);
        lo = std::min(lo, r.p_succ);
        hi = std::max(hi, r.p_succ);
    }
    if (Ls.size() < 3 || ps.size() < 3) {
        throw FitError(FitError::Kind::Degenerate, "threshold fit needs at least 3 distinct L and 3 distinct p values");
    }
    if (hi - lo < 1e-12) {
        throw FitError(FitError::Kind::Degenerate, "success probabilities are constant; nothing to fit");
    }
    if (!(w.p_hi > w.p_lo)) {
        throw FitError(FitError::Kind::Degenerate, "data window has an empty p range");
    }
}

ThresholdFit fit_core(const DataWindow &w, const FitOptions &opts, const Nonlinear &start) {
    check_design(w);
    const Problem problem{&w.rows, &opts, w.p_lo, w.p_hi};
    // Restart from the best vertex until the objective stops improving.
    SimplexResult r = nelder_mead(problem, start, opts.max_iterations);
    std::size_t iterations = r.iterations;
    for (int restart = 0; restart < 3; restart++) {
        SimplexResult again = nelder_mead(problem, r.best, opts.max_iterations);
        iterations += again.iterations;
        const bool improved = again.value < r.value - 1e-12 * (1 + std::abs(r.value));
        if (again.value <= r.value) {
            r = again;
        }
        if (!improved) {
            break;
        }
    }
    const Nonlinear q = problem.clamp(r.best);
    const Evaluation ev = solve_linear(w.rows, q, opts.stderr_floor);
    return {q.p_th, q.nu, q.mu, ev.beta(0), ev.beta(1), ev.beta(2), ev.beta(3), ev.rss, 0.0, 0, iterations};
}

}  // namespace

ThresholdFit fit_threshold(const DataWindow &window, const FitOptions &opts) {
    ThresholdFit fit = fit_core(window, opts, {(window.p_lo + window.p_hi) / 2, 1.0, 1.0});

    std::vector<std::optional<double>> resampled(opts.bootstrap);
    const auto count = static_cast<std::int64_t>(opts.bootstrap);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; i++) {
        RngStream rng(opts.seed, static_cast<std::uint64_t>(i), StreamLabel::Bootstrap);
        std::uniform_int_distribution<std::size_t> pick(0, window.rows.size() - 1);
        DataWindow w{{}, window.p_lo, window.p_hi};
        for (std::size_t k = 0; k < window.rows.size(); k++) {
            w.rows.push_back(window.rows[pick(rng)]);
        }
        try {
            resampled[i] = fit_core(w, opts, {fit.p_th, fit.nu, fit.mu}).p_th;
        } catch (const FitError &) {
            // Resamples that lose a distinct L or p are skipped.
        }
    }

    double sum = 0, sum_sq = 0;
    for (const auto &v : resampled) {
        if (v) {
            fit.bootstrap_used++;
            sum += *v;
            sum_sq += *v * *v;
        }
    }
    if (fit.bootstrap_used > 1) {
        const double n = static_cast<double>(fit.bootstrap_used);
        const double mean = sum / n;
        fit.p_th_stderr = std::sqrt(std::max(0.0, (sum_sq - n * mean * mean) / (n - 1)));
    }
    return fit;
}

double estimate_crossing(std::span<const FitRow> rows) {
    std::map<int, std::map<double, double>> curves;
    for (const auto &r : rows) {
        curves[r.L][r.p] = r.p_succ;
    }
    if (curves.size() < 2) {
        throw FitError(FitError::Kind::Window, "need curves for at least two distances to find a crossing");
    }
    const auto &big = std::prev(curves.end())->second;
    const auto &small = std::prev(curves.end(), 2)->second;

    std::vector<std::pair<double, double>> diff;
    for (const auto &[p, s] : big) {
        if (auto it = small.find(p); it != small.end()) {
            diff.emplace_back(p, s - it->second);
        }
    }
    for (std::size_t i = 0; i + 1 < diff.size(); i++) {
        const auto [p0, d0] = diff[i];
        const auto [p1, d1] = diff[i + 1];
        if (d0 > 0 && d1 <= 0) {
            return p0 + (p1 - p0) * d0 / (d0 - d1);
        }
    }
    throw FitError(FitError::Kind::Window, "the two largest-L curves do not cross in the sampled range");
}

DataWindow select_window(std::span<const FitRow> rows, const WindowOptions &opts) {
    if (rows.empty()) {
        throw FitError(FitError::Kind::Window, "no data rows");
    }
    const double c = estimate_crossing(rows);
    DataWindow w{{}, c - opts.half_width, c + opts.half_width};
    const double eps = 1e-12;
    for (const auto &r : rows) {
        if (std::abs(r.p - c) <= opts.half_width + eps) {
            w.rows.push_back(r);
        }
    }
    return w;
}

nlohmann::json to_json(const ThresholdFit &fit) {
    return {
        {"p_th", fit.p_th},
        {"p_th_stderr", fit.p_th_stderr},
        {"nu", fit.nu},
        {"mu", fit.mu},
        {"A", fit.A},
        {"B", fit.B},
        {"C", fit.C},
        {"D", fit.D},
        {"rss", fit.rss},
        {"bootstrap_used", fit.bootstrap_used},
        {"iterations", fit.iterations},
    };
}

}  // namespace qhdrg
