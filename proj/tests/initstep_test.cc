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


#include "qhdrg/initstep.h"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "qhdrg/hdrg.h"

using namespace qhdrg;

namespace {

// Monotone lattice paths by recursion on the first step.
std::uint64_t count_paths(int h, int v, int z) {
    if (h == 0 && v == 0 && z == 0) {
        return 1;
    }
    std::uint64_t n = 0;
    if (h > 0) {
        n += count_paths(h - 1, v, z);
    }
    if (v > 0) {
        n += count_paths(h, v - 1, z);
    }
    if (z > 0) {
        n += count_paths(h, v, z - 1);
    }
    return n;
}

ChangesHistory random_history(int L, int T, QuditDim d, double density, std::mt19937_64 &rng) {
    ChangesHistory h(L, T, d);
    std::bernoulli_distribution hit(density);
    std::uniform_int_distribution<Charge> c(1, d.value() - 1);
    for (int t = 1; t <= T; t++) {
        for (int x = 1; x <= L; x++) {
            for (int y = 1; y <= L - 1; y++) {
                if (hit(rng)) {
                    h.set({t, x, y}, c(rng));
                }
            }
        }
    }
    return h;
}

SyndromeLayer flattened(const ChangesHistory &h) {
    SyndromeLayer s = h.layer(1);
    for (int t = 2; t <= h.time_steps(); t++) {
        s.compose(h.layer(t), h.dim());
    }
    return s;
}

}  // namespace

TEST(degeneracy, multinomial_identity) {
    for (int h = 0; h <= 5; h++) {
        for (int v = 0; h + v <= 5; v++) {
            for (int z = 0; h + v + z <= 5; z++) {
                if (h + v + z == 0) {
                    ASSERT_THROW(degeneracy(h, v, z), std::invalid_argument);
                    continue;
                }
                ASSERT_EQ(degeneracy(h, v, z), count_paths(h, v, z)) << h << "," << v << "," << z;
            }
        }
    }
    ASSERT_EQ(degeneracy(1, 1, 1), 6u);
    ASSERT_EQ(degeneracy(2, 0, 0), 1u);
    ASSERT_EQ(degeneracy(10, 10, 10), 5550996791340ull);
    ASSERT_THROW(degeneracy(-1, 2, 0), std::invalid_argument);
}

TEST(init_catalog, path_counts) {
    const std::size_t paths[] = {6, 24, 6, 48};
    const std::size_t endpoints[] = {6, 12, 6, 8};
    const int distance[] = {1, 2, 2, 3};
    const std::uint64_t degen[] = {1, 2, 1, 6};
    for (int i = 1; i <= 4; i++) {
        const auto &lvl = level_catalog(i);
        ASSERT_EQ(lvl.index, i);
        ASSERT_EQ(lvl.paths.size(), paths[i - 1]);
        ASSERT_EQ(lvl.endpoint_count, endpoints[i - 1]);
        ASSERT_EQ(lvl.distance, distance[i - 1]);
        ASSERT_EQ(lvl.degeneracy, degen[i - 1]);

        std::set<std::vector<Cell>> distinct;
        std::map<Cell, std::size_t> per_endpoint;
        for (const auto &p : lvl.paths) {
            ASSERT_EQ(static_cast<int>(p.size()), lvl.distance);
            Cell prev{0, 0, 0};
            for (const Cell &c : p) {
                ASSERT_EQ(manhattan(prev, c), 1);
                prev = c;
            }
            ASSERT_EQ(manhattan({0, 0, 0}, p.back()), lvl.distance);
            per_endpoint[p.back()]++;
            distinct.insert(p);
        }
        ASSERT_EQ(distinct.size(), lvl.paths.size());
        ASSERT_EQ(per_endpoint.size(), lvl.endpoint_count);
        for (const auto &[end, n] : per_endpoint) {
            ASSERT_EQ(n, lvl.degeneracy);
        }
    }
    ASSERT_THROW(level_catalog(0), std::invalid_argument);
    ASSERT_THROW(level_catalog(5), std::invalid_argument);
}

TEST(init_catalog, first_level_order) {
    const auto &lvl = level_catalog(1);
    std::vector<Cell> ends;
    for (const auto &p : lvl.paths) {
        ends.push_back(p.back());
    }
    std::vector<Cell> expect{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    ASSERT_EQ(ends, expect);
}

TEST(enumerate_paths, clipped_at_corner) {
    Spacetime st{6, 6, true};
    auto corner = enumerate_paths({1, 1, 1}, 1, st);
    ASSERT_EQ(corner.size(), 3u);
    auto bulk = enumerate_paths({3, 3, 3}, 1, st);
    ASSERT_EQ(bulk.size(), 6u);
    ASSERT_EQ(enumerate_paths({3, 3, 3}, 4, st).size(), 48u);
    ASSERT_EQ(enumerate_paths({1, 1, 1}, 4, st).size(), 6u);
    for (const auto &p : corner) {
        for (const Cell &c : p) {
            ASSERT_TRUE(st.contains(c));
        }
    }
}

TEST(path_charge, examples) {
    QuditDim d(7);
    std::vector<Defect> in{{{2, 2, 2}, 3}, {{2, 3, 2}, 1}, {{2, 4, 2}, 3}};
    auto h = ChangesHistory::from_defects(5, 4, d, in);
    std::vector<Cell> one{{2, 3, 2}};
    ASSERT_EQ(path_charge({2, 2, 2}, one, h), 4u);
    std::vector<Cell> two{{2, 3, 2}, {2, 4, 2}};
    ASSERT_EQ(path_charge({2, 2, 2}, two, h), 0u);
    std::vector<Cell> empty_end{{3, 2, 2}};
    ASSERT_EQ(path_charge({2, 2, 2}, empty_end, h), 3u);
}

TEST(initialize, depth_zero_is_identity) {
    std::mt19937_64 rng(41);
    auto g = build_geometry(5);
    auto h = random_history(5, 5, QuditDim(3), 0.2, rng);
    auto r = initialize(h, 0, g);
    ASSERT_EQ(r.reduced, h);
    ASSERT_EQ(r.annihilated_paths, 0u);
    ASSERT_THROW(initialize(h, 5, g), std::invalid_argument);
    ASSERT_THROW(initialize(h, -1, g), std::invalid_argument);
    ASSERT_THROW(initialize(h, 1, build_geometry(4)), std::invalid_argument);
}

TEST(initialize, straight_triple) {
    // Charges 3, 1, 3 in a row (d=7): no neighbour pair is neutral, but the distance-2 straight
    // path through the middle is.
    auto g = build_geometry(6);
    QuditDim d(7);
    std::vector<Defect> in{{{2, 2, 2}, 3}, {{2, 3, 2}, 1}, {{2, 4, 2}, 3}};
    auto h = ChangesHistory::from_defects(6, 4, d, in);
    auto r1 = initialize(h, 1, g);
    ASSERT_EQ(r1.reduced, h);
    auto r2 = initialize(h, 2, g);
    ASSERT_EQ(r2.reduced, h);
    auto r3 = initialize(h, 3, g);
    ASSERT_EQ(r3.reduced.defect_count(), 0u);
    ASSERT_EQ(r3.annihilated_paths, 1u);
    ErrorLayer expect = g.zero_errors();
    expect[g.horizontal_index(2, 2)] = 3;
    expect[g.horizontal_index(3, 2)] = 4;
    ASSERT_EQ(r3.corrections.at(2), expect);
}

TEST(initialize, time_pair_emits_nothing) {
    auto g = build_geometry(5);
    QuditDim d(5);
    std::vector<Defect> in{{{2, 3, 2}, 2}, {{3, 3, 2}, 3}};
    auto r = initialize(ChangesHistory::from_defects(5, 5, d, in), 1, g);
    ASSERT_EQ(r.reduced.defect_count(), 0u);
    for (int t = 1; t <= 5; t++) {
        ASSERT_TRUE(r.corrections.at(t).is_zero());
    }
}

TEST(initialize, never_touches_boundaries) {
    auto g = build_geometry(5);
    QuditDim d(5);
    std::vector<Defect> in{{{5, 1, 1}, 2}};
    auto h = ChangesHistory::from_defects(5, 5, d, in);
    auto r = initialize(h, 4, g);
    ASSERT_EQ(r.reduced, h);
}

TEST(initialize, qubit_level_one_matches_greedy_pairing) {
    std::mt19937_64 rng(42);
    for (int rep = 0; rep < 100; rep++) {
        const int L = 3 + static_cast<int>(rng() % 6);
        auto g = build_geometry(L);
        QuditDim d(2);
        auto h = random_history(L, L, d, 0.25, rng);

        // Greedy oracle: visit defects in (t,x,y) order, pair each live one with its first live
        // neighbour in the order +t, -t, +x, -x, +y, -y.
        ChangesHistory expect = h;
        const Spacetime st = h.spacetime();
        const Cell dirs[] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
        for (const Defect &def : h.defects()) {
            if (expect.at(def.at) == 0) {
                continue;
            }
            for (const Cell &o : dirs) {
                Cell nb{def.at.t + o.t, def.at.x + o.x, def.at.y + o.y};
                if (st.contains(nb) && expect.at(nb) != 0) {
                    expect.set(def.at, 0);
                    expect.set(nb, 0);
                    break;
                }
            }
        }
        auto r = initialize(h, 1, g);
        ASSERT_EQ(r.reduced, expect);
        ASSERT_EQ(r.annihilated_paths * 2, h.defect_count() - expect.defect_count());
    }
}

TEST(initialize, conserves_charge) {
    std::mt19937_64 rng(43);
    for (std::uint32_t dv : {2u, 3u, 17u, 7919u}) {
        QuditDim d(dv);
        for (int depth = 1; depth <= 4; depth++) {
            for (int rep = 0; rep < 15; rep++) {
                const int L = 4 + static_cast<int>(rng() % 5);
                auto g = build_geometry(L);
                auto h = random_history(L, L, d, 0.3, rng);
                auto r = initialize(h, depth, g);
                ASSERT_EQ(r.reduced.total_charge(), h.total_charge());
                ASSERT_LE(r.reduced.defect_count(), h.defect_count());
                // Spatial moves are recorded in F; time moves are free. Flattening over t must
                // therefore agree once F's syndrome is added.
                SyndromeLayer lhs = flattened(h);
                for (int t = 1; t <= L; t++) {
                    lhs.compose(compute_syndrome(r.corrections.at(t), g, d), d);
                }
                ASSERT_EQ(lhs, flattened(r.reduced));
                // Every surviving defect was present at the start.
                for (const auto &def : r.reduced.defects()) {
                    ASSERT_EQ(def.charge, h.at(def.at));
                }
            }
        }
    }
}
