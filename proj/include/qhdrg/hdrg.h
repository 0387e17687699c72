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


#ifndef QHDRG_HDRG_H
#define QHDRG_HDRG_H

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "json.hpp"
#include "qhdrg/history.h"
#include "qhdrg/lattice.h"

namespace qhdrg {

/// The three smooth boundaries of the spacetime grid, in tie-break order.
enum class BoundarySide : std::uint8_t { South, North, Time };

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// |dt| + |dx| + |dy|.
int manhattan(const Cell &a, const Cell &b);

/// Steps from a cell to a boundary: y to the south, L-y to the north, T+1-t to the future time
/// boundary. kUnreachable for a closed time boundary.
int boundary_distance(const Cell &c, BoundarySide side, const Spacetime &st);

struct Cluster {
    /// Lexicographic (t,x,y) order; defects[0] is the cluster's smallest defect.
    std::vector<Defect> defects;
    Charge charge = 0;
    BoundarySide nearest_boundary = BoundarySide::South;
    int boundary_distance = kUnreachable;
    /// Index into `defects` of the defect closest to `nearest_boundary`.
    std::size_t boundary_anchor = 0;
};

/// Maximal delta-connected components (transitive closure of manhattan <= delta), via union-find.
/// Clusters come out ordered by their smallest defect.
std::vector<Cluster> cluster_defects(std::span<const Defect> defects, int delta, const Spacetime &st, QuditDim d);

enum class ClusterKind : std::uint8_t { Neutral, BoundaryNeutral, Charged };

/// Neutral iff the total charge is 0; else BoundaryNeutral iff some defect is within delta of an
/// open boundary; else Charged.
ClusterKind classify_cluster(const Cluster &c, int delta);

/// Fuses a Neutral or BoundaryNeutral cluster into `F`. Neutral clusters meet at their smallest
/// defect; boundary-neutral clusters meet at the defect nearest the boundary and then push the
/// residual charge out through it. Time-like moves emit nothing. Throws std::logic_error when
/// asked to fuse a Charged cluster.
void fuse_cluster(
    const Cluster &c, ClusterKind kind, const CodeGeometry &g, QuditDim d, CorrectionHistory &F);

struct DecoderConfig {
    /// Closed for the noise-free 2D verification round.
    bool time_boundary = true;
    /// Negative selects the default cap ceil(log2(L + T)).
    int max_level = -1;
};

int default_max_level(int L, int T);

struct LevelTrace {
    int level;
    int delta;
    std::size_t clusters;
    std::size_t neutral;
    std::size_t boundary_neutral;
    std::size_t charged;
    std::size_t defects_before;
    std::size_t defects_after;
};

struct DecodeResult {
    CorrectionHistory corrections;
    std::vector<LevelTrace> levels;
};

/// Hard-decision renormalization-group decoding with delta = 2^level, level = 0, 1, ...
/// Terminates with no defects left.
DecodeResult decode(const ChangesHistory &changes, const CodeGeometry &g, const DecoderConfig &cfg = {});

nlohmann::json to_json(const LevelTrace &level);

}  // namespace qhdrg

#endif
