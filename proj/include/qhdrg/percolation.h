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


#ifndef QHDRG_PERCOLATION_H
#define QHDRG_PERCOLATION_H

#include <cstddef>

#include "qhdrg/history.h"

namespace qhdrg {

struct PercolationResult {
    /// Some 1-connected cluster holds defects at both x=1 and x=L.
    bool spans_x = false;
    /// Some 1-connected cluster holds defects at both y=1 and y=L-1.
    bool spans_y = false;
    std::size_t largest_cluster = 0;

    bool spans() const {
        return spans_x || spans_y;
    }
};

/// Spanning check over the 1-connected defect clusters of a changes history. The t direction
/// is not checked.
PercolationResult percolates(const ChangesHistory &changes);

}  // namespace qhdrg

#endif
