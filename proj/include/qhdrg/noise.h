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


#ifndef QHDRG_NOISE_H
#define QHDRG_NOISE_H

#include <span>
#include <vector>

#include "qhdrg/lattice.h"
#include "qhdrg/rng.h"

namespace qhdrg {

/// Uncorrelated noise: each site picks one of the d-1 non-trivial shifts with probability
/// p/(d-1) each, and is left alone with probability 1-p.
struct NoiseParams {
    double p;
    QuditDim d;

    NoiseParams(double p, QuditDim d);
};

/// Fresh X^k errors, one independent draw per edge.
ErrorLayer sample_qudit_noise(const NoiseParams &params, const CodeGeometry &g, RngStream &rng);

/// Fresh outcome shifts j -> j + k, one per plaquette. Composed additively onto true syndromes.
SyndromeLayer sample_measurement_noise(const NoiseParams &params, const CodeGeometry &g, RngStream &rng);

struct Histories {
    /// errors[t-1] is the accumulated error e_t.
    std::vector<ErrorLayer> errors;
    /// syndromes[t-1] is the measured s_t = syndrome(e_t) + measurement shift at t.
    std::vector<SyndromeLayer> syndromes;
};

/// Builds e_t and s_t from explicit per-step fresh errors and measurement shifts.
Histories accumulate_histories(
    std::span<const ErrorLayer> fresh_errors,
    std::span<const SyndromeLayer> measurement_shifts,
    const CodeGeometry &g,
    QuditDim d);

/// T rounds of noise. Qudit noise is drawn from `qudit_rng`, measurement noise from
/// `measurement_rng`, so changing one channel does not perturb the other.
Histories generate_histories(
    const NoiseParams &params, const CodeGeometry &g, int time_steps, RngStream &qudit_rng, RngStream &measurement_rng);

}  // namespace qhdrg

#endif
