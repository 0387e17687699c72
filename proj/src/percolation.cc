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


#include "qhdrg/percolation.h"

#include <algorithm>

#include "qhdrg/hdrg.h"

namespace qhdrg {

PercolationResult percolates(const ChangesHistory &changes) {
    PercolationResult r;
    const int L = changes.distance();
    const auto defects = changes.defects();
    for (const Cluster &c : cluster_defects(defects, 1, changes.spacetime(), changes.dim())) {
        bool x_lo = false, x_hi = false, y_lo = false, y_hi = false;
        for (const Defect &def : c.defects) {
            x_lo |= def.at.x == 1;
            x_hi |= def.at.x == L;
            y_lo |= def.at.y == 1;
            y_hi |= def.at.y == L - 1;
        }
        r.spans_x |= x_lo && x_hi;
        r.spans_y |= y_lo && y_hi;
        r.largest_cluster = std::max(r.largest_cluster, c.defects.size());
    }
    return r;
}

}  // namespace qhdrg
