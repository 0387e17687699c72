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


#include "qhdrg/scaling.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "qhdrg/montecarlo.h"

namespace qhdrg {

double loglog_slope(std::span<const ScalingPoint> points) {
    const double n = static_cast<double>(points.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto &pt : points) {
        const double x = std::log(pt.L);
        const double y = std::log(std::max(pt.median_seconds, 1e-12));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ScalingReport measure_decode_scaling(std::span<const int> distances, const ScalingOptions &opts) {
    if (std::set<int>(distances.begin(), distances.end()).size() < 3) {
        throw std::invalid_argument("scaling needs at least three distinct distances");
    }
    if (opts.samples < 1) {
        throw std::invalid_argument("scaling needs at least one sample per distance");
    }
    ScalingReport report{};
    for (int L : distances) {
        const CellSpec cell{opts.d, L, L, opts.p, opts.init_depth};
        validate(cell);
        const std::uint64_t seed = cell_seed(opts.seed, cell);
        std::vector<double> times;
        for (std::size_t k = 0; k < opts.samples; k++) {
            times.push_back(run_trial({cell, seed, k}).decode_seconds);
        }
        std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
        report.points.push_back({L, times[times.size() / 2]});
    }
    report.slope = loglog_slope(report.points);
    return report;
}

nlohmann::json to_json(const ScalingReport &report) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto &pt : report.points) {
        pts.push_back({{"L", pt.L}, {"median_decode_seconds", pt.median_seconds}});
    }
    return {{"points", pts}, {"loglog_slope", report.slope}};
}

}  // namespace qhdrg
