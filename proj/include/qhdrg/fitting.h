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


#ifndef QHDRG_FITTING_H
#define QHDRG_FITTING_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qhdrg/montecarlo.h"

namespace qhdrg {

struct FitRow {
    int L;
    double p;
    double p_succ;
    double std_error;
};

std::vector<FitRow> fit_rows(std::span<const SuccessEstimate> estimates);

struct DataWindow {
    std::vector<FitRow> rows;
    double p_lo;
    double p_hi;
};

/// Finite-size-scaling fit
///   P_succ = A + B x + C x^2 + D L^(-1/mu),   x = (p - p_th) L^(1/nu).
struct ThresholdFit {
    double p_th;
    double nu;
    double mu;
    double A, B, C, D;
    /// Weighted residual sum of squares at the optimum.
    double rss;
    /// Bootstrap standard deviation of p_th.
    double p_th_stderr;
    std::size_t bootstrap_used;
    std::size_t iterations;
};

class FitError : public std::runtime_error {
   public:
    enum class Kind { Degenerate, Convergence, Window };
    FitError(Kind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {
    }
    Kind kind() const {
        return kind_;
    }

   private:
    Kind kind_;
};

struct FitOptions {
    std::size_t bootstrap = 200;
    std::uint64_t seed = 1;
    std::size_t max_iterations = 5000;
    /// Rows with a zero standard error are weighted as if their error were this.
    double stderr_floor = 1e-3;
    double nu_min = 0.5, nu_max = 3.0;
    double mu_min = 0.3, mu_max = 5.0;
};

/// Weighted least squares (weights 1/stderr^2). For fixed (p_th, nu, mu) the linear
/// coefficients come from a QR solve; (p_th, nu, mu) are found by Nelder-Mead starting at the
/// window centre with nu = mu = 1, constrained to the window and the FitOptions bounds.
/// Throws FitError::Degenerate if the window has fewer than 3 distinct L or p or carries no
/// variation, FitError::Convergence if the simplex does not shrink within max_iterations.
ThresholdFit fit_threshold(const DataWindow &window, const FitOptions &opts = {});

/// Where the curves of the two largest L cross, by linear interpolation of their difference over
/// the p values they share. The crossing is the first change from "larger L better" to
/// "larger L worse". Throws FitError::Window if there is none.
double estimate_crossing(std::span<const FitRow> rows);

struct WindowOptions {
    double half_width = 0.005;
};

/// All rows with |p - crossing| <= half_width.
DataWindow select_window(std::span<const FitRow> rows, const WindowOptions &opts = {});

nlohmann::json to_json(const ThresholdFit &fit);

}  // namespace qhdrg

#endif
