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


#include "qhdrg/history.h"

#include <gtest/gtest.h>

#include <random>

#include "qhdrg/noise.h"
#include "test_util.h"

using namespace qhdrg;

TEST(syndrome_changes, trivial) {
    auto g = build_geometry(4);
    std::vector<SyndromeLayer> s(5, g.zero_syndrome());
    auto h = syndrome_changes(s, g, QuditDim(3));
    ASSERT_EQ(h.defect_count(), 0u);
    ASSERT_EQ(h.time_steps(), 5);
    ASSERT_TRUE(h.defects().empty());
}

TEST(syndrome_changes, static_error_only_first_layer) {
    auto g = build_geometry(5);
    QuditDim d(7);
    ErrorLayer e = g.zero_errors();
    e[g.horizontal_index(2, 3)] = 4;
    e[g.vertical_index(5, 1)] = 2;
    std::vector<SyndromeLayer> s(5, compute_syndrome(e, g, d));
    auto h = syndrome_changes(s, g, d);
    ASSERT_EQ(h.defect_count(), 3u);
    for (const auto &def : h.defects()) {
        ASSERT_EQ(def.at.t, 1);
    }
    ASSERT_EQ(h.at({1, 2, 3}), 3u);
    ASSERT_EQ(h.at({1, 3, 3}), 4u);
    ASSERT_EQ(h.at({1, 5, 1}), 2u);
}

TEST(syndrome_changes, measurement_error_pair) {
    auto g = build_geometry(4);
    QuditDim d(5);
    const int T = 4;
    for (int t = 1; t <= T; t++) {
        std::vector<SyndromeLayer> s(T, g.zero_syndrome());
        s[t - 1][g.plaquette_index(2, 3)] = 2;
        auto h = syndrome_changes(s, g, d);
        auto defects = h.defects();
        if (t < T) {
            ASSERT_EQ(defects.size(), 2u);
            ASSERT_EQ(defects[0], (Defect{{t, 2, 3}, 2}));
            ASSERT_EQ(defects[1], (Defect{{t + 1, 2, 3}, 3}));
        } else {
            ASSERT_EQ(defects.size(), 1u);
            ASSERT_EQ(defects[0], (Defect{{T, 2, 3}, 2}));
        }
    }
}

TEST(syndrome_changes, partial_sums_round_trip) {
    std::mt19937_64 seeder(21);
    for (int L : {2, 3, 6}) {
        auto g = build_geometry(L);
        for (std::uint32_t dv : {2u, 5u, 7919u}) {
            QuditDim d(dv);
            NoiseParams params(0.3, d);
            RngStream q(seeder(), 0, StreamLabel::QuditNoise), m(seeder(), 0, StreamLabel::MeasurementNoise);
            auto hist = generate_histories(params, g, L, q, m);
            auto h = syndrome_changes(hist.syndromes, g, d);
            SyndromeLayer acc = g.zero_syndrome();
            for (int t = 1; t <= L; t++) {
                acc.compose(h.layer(t), d);
                ASSERT_EQ(acc, hist.syndromes[t - 1]);
            }
        }
    }
}

TEST(syndrome_changes, errors) {
    auto g = build_geometry(4);
    std::vector<SyndromeLayer> none;
    ASSERT_THROW(syndrome_changes(none, g, QuditDim(2)), std::invalid_argument);
    std::vector<SyndromeLayer> bad{g.zero_syndrome(), SyndromeLayer(3)};
    ASSERT_THROW(syndrome_changes(bad, g, QuditDim(2)), std::invalid_argument);
}

TEST(changes_history, defects_order_and_charge) {
    QuditDim d(5);
    std::vector<Defect> in{{{2, 1, 1}, 1}, {{1, 3, 2}, 4}, {{1, 1, 2}, 2}, {{1, 1, 2}, 4}};
    auto h = ChangesHistory::from_defects(3, 2, d, in);
    std::vector<Defect> expect{{{1, 1, 2}, 1}, {{1, 3, 2}, 4}, {{2, 1, 1}, 1}};
    ASSERT_EQ(h.defects(), expect);
    ASSERT_EQ(h.total_charge(), 1u);
    std::vector<Defect> outside{{{3, 1, 1}, 1}};
    ASSERT_THROW(ChangesHistory::from_defects(3, 2, d, outside), std::invalid_argument);
    ASSERT_THROW(ChangesHistory(1, 2, d), std::invalid_argument);
}

TEST(project_correction, cancellation) {
    auto g = build_geometry(3);
    QuditDim d(7);
    CorrectionHistory F(g, 3);
    ASSERT_TRUE(project_correction(F, d).is_zero());
    F.at(1)[2] = 3;
    F.at(2)[2] = 4;
    ASSERT_TRUE(project_correction(F, d).is_zero());
    F.at(3)[0] = 6;
    auto f = project_correction(F, d);
    ASSERT_EQ(f[0], 6u);
    ASSERT_EQ(f[2], 0u);
}

TEST(project_correction, homomorphism) {
    std::mt19937_64 rng(22);
    auto g = build_geometry(5);
    QuditDim d(11);
    for (int rep = 0; rep < 20; rep++) {
        CorrectionHistory A(g, 4), B(g, 4);
        for (int t = 1; t <= 4; t++) {
            A.at(t) = qhdrg_test::random_errors(g, d, rng);
            B.at(t) = qhdrg_test::random_errors(g, d, rng);
        }
        auto fa = project_correction(A, d);
        fa.compose(project_correction(B, d), d);
        A.compose(B, d);
        ASSERT_EQ(project_correction(A, d), fa);
    }
}

TEST(changes_history, json_dump) {
    QuditDim d(7919);
    std::vector<Defect> in{{{1, 2, 1}, 7000}, {{2, 1, 2}, 3}};
    auto j = to_json(ChangesHistory::from_defects(3, 2, d, in));
    ASSERT_EQ(j.dump(), R"({"L":3,"T":2,"d":7919,"defects":[[1,2,1,7000],[2,1,2,3]]})");
}
