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


#ifndef QHDRG_HISTORY_H
#define QHDRG_HISTORY_H

#include <compare>
#include <span>
#include <vector>

#include "json.hpp"
#include "qhdrg/lattice.h"

namespace qhdrg {

/// A spacetime cell of the syndrome-changes grid. t in [1,T], x in [1,L], y in [1,L-1].
struct Cell {
    int t;
    int x;
    int y;
    auto operator<=>(const Cell &) const = default;
};

/// A non-trivial entry of the changes history.
struct Defect {
    Cell at;
    Charge charge;
    bool operator==(const Defect &) const = default;
};

/// Shape of the spacetime grid plus which boundaries can absorb charge.
struct Spacetime {
    int L;
    int T;
    /// Open future time boundary at t = T+1. Closed for a noise-free single round.
    bool time_boundary = true;

    bool contains(const Cell &c) const {
        return c.t >= 1 && c.t <= T && c.x >= 1 && c.x <= L && c.y >= 1 && c.y <= L - 1;
    }
    std::size_t num_cells() const {
        return static_cast<std::size_t>(T) * L * (L - 1);
    }
    std::size_t index(const Cell &c) const {
        return (static_cast<std::size_t>(c.t - 1) * (L - 1) + (c.y - 1)) * L + (c.x - 1);
    }
};

/// The 3D grid of syndrome changes. Dense storage; `defects()` lists the non-trivial entries
/// in lexicographic (t,x,y) order.
class ChangesHistory {
   public:
    ChangesHistory(int L, int T, QuditDim d);

    int distance() const {
        return L_;
    }
    int time_steps() const {
        return T_;
    }
    QuditDim dim() const {
        return d_;
    }
    Spacetime spacetime(bool time_boundary = true) const {
        return {L_, T_, time_boundary};
    }

    Charge at(const Cell &c) const {
        return charges_[spacetime().index(c)];
    }
    void set(const Cell &c, Charge v) {
        charges_[spacetime().index(c)] = v;
    }
    void add(const Cell &c, Charge v) {
        auto &slot = charges_[spacetime().index(c)];
        slot = d_.add(slot, v);
    }

    std::vector<Defect> defects() const;
    std::size_t defect_count() const;
    Charge total_charge() const;

    /// Layer t (1-based) as a plaquette field.
    SyndromeLayer layer(int t) const;

    static ChangesHistory from_defects(int L, int T, QuditDim d, std::span<const Defect> defects);

    bool operator==(const ChangesHistory &) const = default;

   private:
    int L_;
    int T_;
    QuditDim d_;
    std::vector<Charge> charges_;
};

/// Per-time-step spatial corrections F = {f_1..f_T}. Time-like moves carry no operator.
class CorrectionHistory {
   public:
    CorrectionHistory(const CodeGeometry &g, int time_steps);

    int time_steps() const {
        return static_cast<int>(layers_.size());
    }
    ErrorLayer &at(int t) {
        return layers_.at(t - 1);
    }
    const ErrorLayer &at(int t) const {
        return layers_.at(t - 1);
    }
    /// Layerwise this += other (mod d).
    void compose(const CorrectionHistory &other, QuditDim d);

   private:
    std::vector<ErrorLayer> layers_;
};

/// s'_1 = s_1, s'_t = s_t - s_{t-1} (mod d). Throws std::invalid_argument on empty input or
/// layers that don't match the geometry.
ChangesHistory syndrome_changes(std::span<const SyndromeLayer> syndromes, const CodeGeometry &g, QuditDim d);

/// Drops time-like edges and sums the spatial layers: f~ = f_1 + ... + f_T (mod d).
ErrorLayer project_correction(const CorrectionHistory &F, QuditDim d);

/// {"L":..,"T":..,"d":..,"defects":[[t,x,y,charge],...]}
nlohmann::json to_json(const ChangesHistory &h);

}  // namespace qhdrg

#endif
