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


#include "qhdrg/noise.h"

#include <algorithm>
#include <stdexcept>

namespace qhdrg {

NoiseParams::NoiseParams(double p, QuditDim d) : p(p), d(d) {
    if (!(p >= 0.0 && p < 1.0)) {
        throw std::invalid_argument("error rate must lie in [0, 1)");
    }
}

namespace {

// One draw per site: u < p selects an error, and u/p (uniform on [0,1)) picks which shift.
template <typename Field>
void fill(Field &field, const NoiseParams &params, RngStream &rng) {
    const double p = params.p;
    const std::uint32_t choices = params.d.value() - 1;
    for (std::size_t i = 0; i < field.size(); i++) {
        double u = rng.uniform01();
        if (u < p) {
            auto k = static_cast<std::uint32_t>(u / p * choices);
            field[i] = std::min(k, choices - 1) + 1;
        }
    }
}

}  // namespace

ErrorLayer sample_qudit_noise(const NoiseParams &params, const CodeGeometry &g, RngStream &rng) {
    ErrorLayer e = g.zero_errors();
    fill(e, params, rng);
    return e;
}

SyndromeLayer sample_measurement_noise(const NoiseParams &params, const CodeGeometry &g, RngStream &rng) {
    SyndromeLayer s = g.zero_syndrome();
    fill(s, params, rng);
    return s;
}

Histories accumulate_histories(
    std::span<const ErrorLayer> fresh_errors,
    std::span<const SyndromeLayer> measurement_shifts,
    const CodeGeometry &g,
    QuditDim d) {
    if (fresh_errors.empty() || fresh_errors.size() != measurement_shifts.size()) {
        throw std::invalid_argument("accumulate_histories: need the same number (>= 1) of error and shift layers");
    }
    Histories h;
    h.errors.reserve(fresh_errors.size());
    h.syndromes.reserve(fresh_errors.size());
    ErrorLayer acc = g.zero_errors();
    for (std::size_t t = 0; t < fresh_errors.size(); t++) {
        acc.compose(fresh_errors[t], d);
        SyndromeLayer s = compute_syndrome(acc, g, d);
        s.compose(measurement_shifts[t], d);
        h.errors.push_back(acc);
        h.syndromes.push_back(std::move(s));
    }
    return h;
}

Histories generate_histories(
    const NoiseParams &params, const CodeGeometry &g, int time_steps, RngStream &qudit_rng, RngStream &measurement_rng) {
    if (time_steps < 1) {
        throw std::invalid_argument("generate_histories: time_steps must be >= 1");
    }
    std::vector<ErrorLayer> fresh;
    std::vector<SyndromeLayer> shifts;
    fresh.reserve(time_steps);
    shifts.reserve(time_steps);
    for (int t = 0; t < time_steps; t++) {
        fresh.push_back(sample_qudit_noise(params, g, qudit_rng));
        shifts.push_back(sample_measurement_noise(params, g, measurement_rng));
    }
    return accumulate_histories(fresh, shifts, g, params.d);
}

}  // namespace qhdrg
