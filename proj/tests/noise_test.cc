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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using namespace qhdrg;

namespace {

// Tallies charges over `draws` sites and checks P(k) = p/(d-1) for k != 0 within 3 sigma.
template <typename Sampler>
void check_frequencies(std::uint32_t dv, double p, std::size_t draws, Sampler sample) {
    std::vector<std::size_t> counts(dv, 0);
    std::size_t seen = 0;
    while (seen < draws) {
        for (Charge c : sample()) {
            counts[c]++;
            seen++;
        }
    }
    auto within = [&](std::size_t count, double prob) {
        double mean = prob * seen;
        double sigma = std::sqrt(seen * prob * (1 - prob));
        return std::abs(count - mean) <= 3 * sigma;
    };
    ASSERT_TRUE(within(seen - counts[0], p)) << "error count " << seen - counts[0];
    for (std::uint32_t k = 1; k < dv; k++) {
        ASSERT_TRUE(within(counts[k], p / (dv - 1))) << "k=" << k << " count=" << counts[k];
    }
}

}  // namespace

TEST(noise, params_validation) {
    ASSERT_THROW(NoiseParams(-0.1, QuditDim(2)), std::invalid_argument);
    ASSERT_THROW(NoiseParams(1.0, QuditDim(2)), std::invalid_argument);
    NoiseParams ok(0.0, QuditDim(3));
    ASSERT_EQ(ok.p, 0.0);
}

TEST(noise, zero_rate_is_silent) {
    auto g = build_geometry(6);
    RngStream r(1, 0, StreamLabel::QuditNoise);
    NoiseParams params(0.0, QuditDim(7));
    for (int i = 0; i < 20; i++) {
        ASSERT_TRUE(sample_qudit_noise(params, g, r).is_zero());
        ASSERT_TRUE(sample_measurement_noise(params, g, r).is_zero());
    }
}

TEST(noise, qudit_frequencies_d5) {
    auto g = build_geometry(20);
    RngStream r(2, 0, StreamLabel::QuditNoise);
    NoiseParams params(0.1, QuditDim(5));
    check_frequencies(5, 0.1, 1000000, [&] {
        auto e = sample_qudit_noise(params, g, r);
        return std::vector<Charge>(e.charges().begin(), e.charges().end());
    });
}

TEST(noise, measurement_frequencies_d3) {
    auto g = build_geometry(20);
    RngStream r(3, 0, StreamLabel::MeasurementNoise);
    NoiseParams params(0.06, QuditDim(3));
    check_frequencies(3, 0.06, 1000000, [&] {
        auto s = sample_measurement_noise(params, g, r);
        return std::vector<Charge>(s.charges().begin(), s.charges().end());
    });
}

TEST(noise, qubit_only_flips) {
    auto g = build_geometry(10);
    RngStream r(4, 0, StreamLabel::QuditNoise);
    NoiseParams params(0.5, QuditDim(2));
    for (int i = 0; i < 50; i++) {
        const ErrorLayer e = sample_qudit_noise(params, g, r);
        for (Charge c : e.charges()) {
            ASSERT_LE(c, 1u);
        }
    }
}

TEST(noise, injected_history) {
    auto g = build_geometry(4);
    QuditDim d(5);
    const int T = 4;
    std::vector<ErrorLayer> fresh(T, g.zero_errors());
    std::vector<SyndromeLayer> shifts(T, g.zero_syndrome());
    fresh[0][g.horizontal_index(2, 2)] = 3;
    fresh[2][g.vertical_index(1, 1)] = 1;
    shifts[1][g.plaquette_index(4, 3)] = 2;

    auto h = accumulate_histories(fresh, shifts, g, d);
    ASSERT_EQ(h.errors.size(), 4u);
    ASSERT_EQ(h.syndromes.size(), 4u);

    ErrorLayer e1 = g.zero_errors();
    e1[g.horizontal_index(2, 2)] = 3;
    ErrorLayer e3 = e1;
    e3[g.vertical_index(1, 1)] = 1;
    ASSERT_EQ(h.errors[0], e1);
    ASSERT_EQ(h.errors[1], e1);
    ASSERT_EQ(h.errors[2], e3);
    ASSERT_EQ(h.errors[3], e3);

    ASSERT_EQ(h.syndromes[0], compute_syndrome(e1, g, d));
    SyndromeLayer s2 = compute_syndrome(e1, g, d);
    s2[g.plaquette_index(4, 3)] = 2;
    ASSERT_EQ(h.syndromes[1], s2);
    ASSERT_EQ(h.syndromes[3], compute_syndrome(e3, g, d));

    std::vector<SyndromeLayer> short_shifts(T - 1, g.zero_syndrome());
    ASSERT_THROW(accumulate_histories(fresh, short_shifts, g, d), std::invalid_argument);
}

TEST(noise, channels_are_independent) {
    auto g = build_geometry(5);
    NoiseParams params(0.2, QuditDim(3));
    RngStream q1(9, 1, StreamLabel::QuditNoise), m1(9, 1, StreamLabel::MeasurementNoise);
    RngStream q2(9, 1, StreamLabel::QuditNoise), m2(9, 7, StreamLabel::MeasurementNoise);
    auto a = generate_histories(params, g, 5, q1, m1);
    auto b = generate_histories(params, g, 5, q2, m2);
    ASSERT_EQ(a.errors, b.errors);
    ASSERT_NE(a.syndromes, b.syndromes);
}
