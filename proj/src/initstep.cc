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

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace qhdrg {

std::uint64_t degeneracy(int h, int v, int z) {
    if (h < 0 || v < 0 || z < 0 || h + v + z == 0) {
        throw std::invalid_argument("degeneracy: step counts must be non-negative and not all zero");
    }
    // Product of two binomials, each built incrementally so intermediate values stay exact.
    auto binom = [](int n, int k) {
        std::uint64_t r = 1;
        for (int i = 1; i <= k; i++) {
            r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
        }
        return r;
    };
    return binom(h + v + z, h) * binom(v + z, v);
}

namespace {

int sign_rank(int v) {
    return v > 0 ? 0 : (v < 0 ? 1 : 2);
}

InitLevel build_level(int index, int distance, std::uint64_t wanted_degeneracy) {
    std::vector<std::array<int, 3>> endpoints;
    for (int a = -distance; a <= distance; a++) {
        for (int b = -distance; b <= distance; b++) {
            for (int c = -distance; c <= distance; c++) {
                if (std::abs(a) + std::abs(b) + std::abs(c) != distance) {
                    continue;
                }
                if (degeneracy(std::abs(a), std::abs(b), std::abs(c)) == wanted_degeneracy) {
                    endpoints.push_back({a, b, c});
                }
            }
        }
    }
    std::sort(endpoints.begin(), endpoints.end(), [](const auto &p, const auto &q) {
        for (int k = 0; k < 3; k++) {
            if (sign_rank(p[k]) != sign_rank(q[k])) {
                return sign_rank(p[k]) < sign_rank(q[k]);
            }
        }
        return false;
    });

    InitLevel level{index, distance, wanted_degeneracy, endpoints.size(), {}};
    for (const auto &e : endpoints) {
        // Axis sequence in sorted order, then every distinct permutation of it.
        std::vector<int> axes;
        for (int k = 0; k < 3; k++) {
            axes.insert(axes.end(), std::abs(e[k]), k);
        }
        do {
            CellPath path;
            std::array<int, 3> pos{0, 0, 0};
            for (int axis : axes) {
                pos[axis] += e[axis] > 0 ? 1 : -1;
                path.push_back({pos[0], pos[1], pos[2]});
            }
            level.paths.push_back(std::move(path));
        } while (std::next_permutation(axes.begin(), axes.end()));
    }
    return level;
}

const std::array<InitLevel, kMaxInitLevel> &catalog() {
    static const std::array<InitLevel, kMaxInitLevel> levels{
        build_level(1, 1, 1),
        build_level(2, 2, 2),
        build_level(3, 2, 1),
        build_level(4, 3, 6),
    };
    return levels;
}

Cell shifted(const Cell &c, const Cell &o) {
    return {c.t + o.t, c.x + o.x, c.y + o.y};
}

}  // namespace

const InitLevel &level_catalog(int i) {
    if (i < 1 || i > kMaxInitLevel) {
        throw std::invalid_argument("unsupported initialization level " + std::to_string(i));
    }
    return catalog()[i - 1];
}

std::vector<CellPath> enumerate_paths(const Cell &center, int level, const Spacetime &st) {
    std::vector<CellPath> out;
    for (const CellPath &tmpl : level_catalog(level).paths) {
        CellPath p;
        p.reserve(tmpl.size());
        bool inside = true;
        for (const Cell &o : tmpl) {
            Cell c = shifted(center, o);
            if (!st.contains(c)) {
                inside = false;
                break;
            }
            p.push_back(c);
        }
        if (inside) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

Charge path_charge(const Cell &center, std::span<const Cell> path, const ChangesHistory &changes) {
    const QuditDim d = changes.dim();
    Charge acc = changes.at(center);
    for (const Cell &c : path) {
        acc = d.add(acc, changes.at(c));
    }
    return acc;
}

namespace {

// Carries the accumulated charge from the centre to the endpoint, clearing every cell.
void annihilate(const Cell &center, std::span<const Cell> path, const CodeGeometry &g, ChangesHistory &s, CorrectionHistory &F) {
    const QuditDim d = s.dim();
    Charge carry = s.at(center);
    s.set(center, 0);
    Cell prev = center;
    for (const Cell &c : path) {
        if (c.t == prev.t && carry != 0) {
            add_step(F.at(c.t), Plaquette{prev.x, prev.y}, Plaquette{c.x, c.y}, carry, g, d);
        }
        carry = d.add(carry, s.at(c));
        s.set(c, 0);
        prev = c;
    }
    if (carry != 0) {
        throw std::logic_error("initialize: annihilated path was not neutral");
    }
}

}  // namespace

InitResult initialize(const ChangesHistory &changes, int depth, const CodeGeometry &g) {
    if (depth < 0 || depth > kMaxInitLevel) {
        throw std::invalid_argument("initialization depth must be in [0, 4], got " + std::to_string(depth));
    }
    if (changes.distance() != g.distance()) {
        throw std::invalid_argument("initialize: changes history and geometry disagree on L");
    }
    InitResult r{CorrectionHistory(g, changes.time_steps()), changes, 0};
    const Spacetime st = changes.spacetime();
    CellPath path;
    for (int level = 1; level <= depth; level++) {
        const auto &templates = level_catalog(level).paths;
        for (const Defect &def : r.reduced.defects()) {
            const Cell center = def.at;
            if (r.reduced.at(center) == 0) {
                continue;
            }
            for (const CellPath &tmpl : templates) {
                path.clear();
                bool inside = true;
                for (const Cell &o : tmpl) {
                    Cell c = shifted(center, o);
                    if (!st.contains(c)) {
                        inside = false;
                        break;
                    }
                    path.push_back(c);
                }
                if (!inside || r.reduced.at(path.back()) == 0 || path_charge(center, path, r.reduced) != 0) {
                    continue;
                }
                annihilate(center, path, g, r.reduced, r.corrections);
                r.annihilated_paths++;
                break;
            }
        }
    }
    return r;
}

}  // namespace qhdrg
