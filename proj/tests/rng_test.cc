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


#include "qhdrg/rng.h"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

using namespace qhdrg;

TEST(rng, mix64_matches_splitmix64) {
    // First three outputs of the reference splitmix64 generator seeded with 0.
    ASSERT_EQ(mix64(0), 0xe220a8397b1dcdafULL);
    ASSERT_EQ(mix64(0x9e3779b97f4a7c15ULL), 0x6e789e6aa1b965f4ULL);
    ASSERT_EQ(mix64(2 * 0x9e3779b97f4a7c15ULL), 0x06c45d188009454fULL);
}

TEST(rng, hash_words_is_order_dependent) {
    ASSERT_NE(hash_words({1, 2}), hash_words({2, 1}));
    ASSERT_NE(hash_words({1}), hash_words({1, 0}));
    ASSERT_EQ(hash_words({5, 6, 7}), hash_words({5, 6, 7}));
}

TEST(rng, streams_reproducible_and_distinct) {
    RngStream a(42, 3, StreamLabel::QuditNoise);
    RngStream b(42, 3, StreamLabel::QuditNoise);
    for (int i = 0; i < 100; i++) {
        ASSERT_EQ(a(), b());
    }
    std::set<std::uint64_t> firsts;
    for (std::uint64_t trial = 0; trial < 50; trial++) {
        for (auto label : {StreamLabel::QuditNoise, StreamLabel::MeasurementNoise, StreamLabel::Bootstrap}) {
            firsts.insert(RngStream(42, trial, label)());
        }
    }
    ASSERT_EQ(firsts.size(), 150u);
}

TEST(rng, uniform01_range_and_mean) {
    RngStream r(1, 0, StreamLabel::QuditNoise);
    double sum = 0;
    const int n = 200000;
    for (int i = 0; i < n; i++) {
        double u = r.uniform01();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    // Mean 1/2, variance 1/12.
    ASSERT_NEAR(sum / n, 0.5, 4 * std::sqrt(1.0 / 12 / n));
}
