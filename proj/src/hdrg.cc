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


#include "qhdrg/hdrg.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace qhdrg {

namespace {

class UnionFind {
   public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    std::size_t find(std::size_t i) {
        while (parent_[i] != i) {
            parent_[i] = parent_[parent_[i]];
            i = parent_[i];
        }
        return i;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return;
        }
        if (size_[a] < size_[b]) {
            std::swap(a, b);
        }
        parent_[b] = a;
        size_[a] += size_[b];
    }

   private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

// Number of integer points with |dt|+|dx|+|dy| <= r.
std::size_t ball_volume(std::size_t r) {
    return (2 * r + 1) * (2 * r * r + 2 * r + 3) / 3;
}

// Offsets of the half ball that are lexicographically after the origin.
std::vector<Cell> forward_ball(int r) {
    std::vector<Cell> out;
    for (int dt = 0; dt <= r; dt++) {
        for (int dx = -(r - dt); dx <= r - dt; dx++) {
            int rem = r - dt - std::abs(dx);
            for (int dy = -rem; dy <= rem; dy++) {
                Cell o{dt, dx, dy};
                if (o > Cell{0, 0, 0}) {
                    out.push_back(o);
                }
            }
        }
    }
    return out;
}

}  // namespace

int manhattan(const Cell &a, const Cell &b) {
    return std::abs(a.t - b.t) + std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

int boundary_distance(const Cell &c, BoundarySide side, const Spacetime &st) {
    switch (side) {
        case BoundarySide::South:
            return c.y;
        case BoundarySide::North:
            return st.L - c.y;
        case BoundarySide::Time:
            return st.time_boundary ? st.T + 1 - c.t : kUnreachable;
    }
    return kUnreachable;
}

std::vector<Cluster> cluster_defects(std::span<const Defect> defects, int delta, const Spacetime &st, QuditDim d) {
    if (delta < 1) {
        throw std::invalid_argument("cluster_defects: delta must be >= 1");
    }
    std::vector<Defect> sorted(defects.begin(), defects.end());
    std::sort(sorted.begin(), sorted.end(), [](const Defect &a, const Defect &b) { return a.at < b.at; });
    const std::size_t n = sorted.size();
    UnionFind uf(n);

    if (ball_volume(delta) >= n) {
        for (std::size_t i = 0; i < n; i++) {
            for (std::size_t j = i + 1; j < n; j++) {
                if (manhattan(sorted[i].at, sorted[j].at) <= delta) {
                    uf.unite(i, j);
                }
            }
        }
    } else {
        std::vector<std::int32_t> slot(st.num_cells(), -1);
        for (std::size_t i = 0; i < n; i++) {
            slot[st.index(sorted[i].at)] = static_cast<std::int32_t>(i);
        }
        const auto offsets = forward_ball(delta);
        for (std::size_t i = 0; i < n; i++) {
            const Cell &c = sorted[i].at;
            for (const Cell &o : offsets) {
                Cell nb{c.t + o.t, c.x + o.x, c.y + o.y};
                if (!st.contains(nb)) {
                    continue;
                }
                if (std::int32_t j = slot[st.index(nb)]; j >= 0) {
                    uf.unite(i, static_cast<std::size_t>(j));
                }
            }
        }
    }

    std::vector<Cluster> clusters;
    std::vector<std::int64_t> cluster_of_root(n, -1);
    for (std::size_t i = 0; i < n; i++) {
        std::size_t r = uf.find(i);
        if (cluster_of_root[r] < 0) {
            cluster_of_root[r] = static_cast<std::int64_t>(clusters.size());
            clusters.emplace_back();
        }
        clusters[cluster_of_root[r]].defects.push_back(sorted[i]);
    }

    for (auto &c : clusters) {
        auto best = std::make_tuple(kUnreachable, BoundarySide::Time, std::size_t{0});
        for (std::size_t i = 0; i < c.defects.size(); i++) {
            const Defect &def = c.defects[i];
            c.charge = d.add(c.charge, def.charge);
            for (auto side : {BoundarySide::South, BoundarySide::North, BoundarySide::Time}) {
                auto cand = std::make_tuple(boundary_distance(def.at, side, st), side, i);
                if (cand < best) {
                    best = cand;
                }
            }
        }
        std::tie(c.boundary_distance, c.nearest_boundary, c.boundary_anchor) = best;
    }
    return clusters;
}

ClusterKind classify_cluster(const Cluster &c, int delta) {
    if (c.charge == 0) {
        return ClusterKind::Neutral;
    }
    if (c.boundary_distance <= delta) {
        return ClusterKind::BoundaryNeutral;
    }
    return ClusterKind::Charged;
}

namespace {

// Moves every defect onto `meet`: time first (no operator), then x and y in layer meet.t.
void gather(const Cluster &c, const Cell &meet, const CodeGeometry &g, QuditDim d, CorrectionHistory &F) {
    ErrorLayer &layer = F.at(meet.t);
    for (const Defect &def : c.defects) {
        if (def.at.x == meet.x && def.at.y == meet.y) {
            continue;
        }
        add_transport(layer, Plaquette{def.at.x, def.at.y}, Plaquette{meet.x, meet.y}, def.charge, g, d);
    }
}

}  // namespace

void fuse_cluster(
    const Cluster &c, ClusterKind kind, const CodeGeometry &g, QuditDim d, CorrectionHistory &F) {
    if (c.defects.empty()) {
        return;
    }
    switch (kind) {
        case ClusterKind::Charged:
            throw std::logic_error("fuse_cluster: cannot fuse a charged cluster");
        case ClusterKind::Neutral:
            gather(c, c.defects.front().at, g, d, F);
            return;
        case ClusterKind::BoundaryNeutral: {
            if (c.boundary_distance == kUnreachable) {
                throw std::logic_error("fuse_cluster: cluster has no reachable boundary");
            }
            const Cell anchor = c.defects[c.boundary_anchor].at;
            gather(c, anchor, g, d, F);
            if (c.nearest_boundary == BoundarySide::Time) {
                return;
            }
            auto side = c.nearest_boundary == BoundarySide::South ? SmoothBoundary::South : SmoothBoundary::North;
            add_transport(F.at(anchor.t), Plaquette{anchor.x, anchor.y}, side, c.charge, g, d);
            return;
        }
    }
}

int default_max_level(int L, int T) {
    int level = 0;
    while ((1 << level) < L + T) {
        level++;
    }
    return level;
}

DecodeResult decode(const ChangesHistory &changes, const CodeGeometry &g, const DecoderConfig &cfg) {
    if (changes.distance() != g.distance()) {
        throw std::invalid_argument("decode: changes history and geometry disagree on L");
    }
    const QuditDim d = changes.dim();
    const Spacetime st = changes.spacetime(cfg.time_boundary);
    const int cap = cfg.max_level >= 0 ? cfg.max_level : default_max_level(st.L, st.T);

    DecodeResult result{CorrectionHistory(g, st.T), {}};
    std::vector<Defect> defects = changes.defects();
    for (int level = 0; !defects.empty(); level++) {
        if (level > cap) {
            throw std::logic_error("decode: defects remain past the maximum level");
        }
        const int delta = 1 << level;
        LevelTrace tr{level, delta, 0, 0, 0, 0, defects.size(), 0};
        std::vector<Defect> remaining;
        for (const Cluster &c : cluster_defects(defects, delta, st, d)) {
            tr.clusters++;
            ClusterKind kind = classify_cluster(c, delta);
            if (kind == ClusterKind::Charged) {
                tr.charged++;
                remaining.insert(remaining.end(), c.defects.begin(), c.defects.end());
                continue;
            }
            (kind == ClusterKind::Neutral ? tr.neutral : tr.boundary_neutral)++;
            fuse_cluster(c, kind, g, d, result.corrections);
        }
        std::sort(remaining.begin(), remaining.end(), [](const Defect &a, const Defect &b) { return a.at < b.at; });
        tr.defects_after = remaining.size();
        result.levels.push_back(tr);
        defects = std::move(remaining);
    }
    return result;
}

nlohmann::json to_json(const LevelTrace &level) {
    return {
        {"level", level.level},
        {"delta", level.delta},
        {"clusters", level.clusters},
        {"neutral", level.neutral},
        {"boundary_neutral", level.boundary_neutral},
        {"charged", level.charged},
        {"defects_before", level.defects_before},
        {"defects_after", level.defects_after},
    };
}

}  // namespace qhdrg
