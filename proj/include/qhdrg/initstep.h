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


#ifndef QHDRG_INITSTEP_H
#define QHDRG_INITSTEP_H

#include <cstdint>
#include <span>
#include <vector>

#include "qhdrg/history.h"
#include "qhdrg/lattice.h"

namespace qhdrg {

/// Number of monotone lattice paths with h, v, z unit steps along the three axes:
/// (h+v+z)! / (h! v! z!). Throws std::invalid_argument for negative or all-zero input.
std::uint64_t degeneracy(int h, int v, int z);

inline constexpr int kMaxInitLevel = 4;

/// A path is the sequence of cells visited after leaving the centre; the last one is the far
/// endpoint. In a catalog entry the cells are offsets relative to the centre.
using CellPath = std::vector<Cell>;

/// One initialization level: all displacements of a given length and path degeneracy.
///   1: distance 1, D=1  ->  6 endpoints,  6 paths
///   2: distance 2, D=2  -> 12 endpoints, 24 paths
///   3: distance 2, D=1  ->  6 endpoints,  6 paths
///   4: distance 3, D=6  ->  8 endpoints, 48 paths
/// Paths are ordered by endpoint (axis t, x, y; + before - before 0 per axis), then by the
/// lexicographic order of their axis sequence.
struct InitLevel {
    int index;
    int distance;
    std::uint64_t degeneracy;
    std::size_t endpoint_count;
    std::vector<CellPath> paths;
};

/// Throws std::invalid_argument unless 1 <= i <= 4.
const InitLevel &level_catalog(int i);

/// Level-i paths from `center`, dropping any that leave the grid.
std::vector<CellPath> enumerate_paths(const Cell &center, int level, const Spacetime &st);

/// Charge of the sub-cluster made of the centre and every cell along the path.
Charge path_charge(const Cell &center, std::span<const Cell> path, const ChangesHistory &changes);

struct InitResult {
    CorrectionHistory corrections;
    ChangesHistory reduced;
    std::size_t annihilated_paths = 0;
};

/// Runs levels 1..depth. Each level makes one sweep over the defects present at its start in
/// (t,x,y) order; at each still-live defect the first neutral path whose endpoint is non-trivial
/// is fused cell by cell towards its endpoint. Never fuses into a boundary.
/// Throws std::invalid_argument unless 0 <= depth <= 4.
InitResult initialize(const ChangesHistory &changes, int depth, const CodeGeometry &g);

}  // namespace qhdrg

#endif
