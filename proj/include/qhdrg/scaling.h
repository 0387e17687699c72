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


#ifndef QHDRG_SCALING_H
#define QHDRG_SCALING_H

#include <cstdint>
#include <span>
#include <vector>

#include "json.hpp"

namespace qhdrg {

struct ScalingPoint {
    int L;
    double median_seconds;
};

struct ScalingReport {
    std::vector<ScalingPoint> points;
    /// Least-squares slope of log(median decode time) against log(L).
    double slope;
};

struct ScalingOptions {
    std::uint32_t d = 2;
    double p = 0.01;
    int init_depth = 0;
    std::size_t samples = 20;
    std::uint64_t seed = 1;
};

/// Median initialization + decode time of `samples` trials (T = L) per distance. Trials run
/// serially so timings are not distorted by contention. Needs at least three distinct
/// distances; throws std::invalid_argument otherwise.
ScalingReport measure_decode_scaling(std::span<const int> distances, const ScalingOptions &opts);

double loglog_slope(std::span<const ScalingPoint> points);

nlohmann::json to_json(const ScalingReport &report);

}  // namespace qhdrg

#endif
