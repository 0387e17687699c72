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

#include <stdexcept>

namespace qhdrg {

ChangesHistory::ChangesHistory(int L, int T, QuditDim d) : L_(L), T_(T), d_(d) {
    if (L < 2 || T < 1) {
        throw std::invalid_argument("ChangesHistory: need L >= 2 and T >= 1");
    }
    charges_.assign(spacetime().num_cells(), 0);
}

std::vector<Defect> ChangesHistory::defects() const {
    std::vector<Defect> out;
    for (int t = 1; t <= T_; t++) {
        for (int x = 1; x <= L_; x++) {
            for (int y = 1; y <= L_ - 1; y++) {
                Cell c{t, x, y};
                if (Charge v = at(c)) {
                    out.push_back({c, v});
                }
            }
        }
    }
    return out;
}

std::size_t ChangesHistory::defect_count() const {
    std::size_t n = 0;
    for (Charge c : charges_) {
        n += c != 0;
    }
    return n;
}

Charge ChangesHistory::total_charge() const {
    Charge acc = 0;
    for (Charge c : charges_) {
        acc = d_.add(acc, c);
    }
    return acc;
}

SyndromeLayer ChangesHistory::layer(int t) const {
    SyndromeLayer s(static_cast<std::size_t>(L_) * (L_ - 1));
    for (int y = 1; y <= L_ - 1; y++) {
        for (int x = 1; x <= L_; x++) {
            s[static_cast<std::size_t>(y - 1) * L_ + (x - 1)] = at({t, x, y});
        }
    }
    return s;
}

ChangesHistory ChangesHistory::from_defects(int L, int T, QuditDim d, std::span<const Defect> defects) {
    ChangesHistory h(L, T, d);
    for (const auto &def : defects) {
        if (!h.spacetime().contains(def.at)) {
            throw std::invalid_argument("ChangesHistory::from_defects: defect outside the grid");
        }
        h.add(def.at, d.reduce(def.charge));
    }
    return h;
}

CorrectionHistory::CorrectionHistory(const CodeGeometry &g, int time_steps) {
    if (time_steps < 1) {
        throw std::invalid_argument("CorrectionHistory: time_steps must be >= 1");
    }
    layers_.assign(time_steps, g.zero_errors());
}

void CorrectionHistory::compose(const CorrectionHistory &other, QuditDim d) {
    if (other.layers_.size() != layers_.size()) {
        throw std::invalid_argument("CorrectionHistory::compose: different number of layers");
    }
    for (std::size_t i = 0; i < layers_.size(); i++) {
        layers_[i].compose(other.layers_[i], d);
    }
}

ChangesHistory syndrome_changes(std::span<const SyndromeLayer> syndromes, const CodeGeometry &g, QuditDim d) {
    if (syndromes.empty()) {
        throw std::invalid_argument("syndrome_changes: no syndrome layers");
    }
    const int L = g.distance();
    ChangesHistory h(L, static_cast<int>(syndromes.size()), d);
    for (std::size_t t = 0; t < syndromes.size(); t++) {
        if (syndromes[t].size() != g.num_plaquettes()) {
            throw std::invalid_argument("syndrome_changes: layer " + std::to_string(t + 1) + " has wrong dimensions");
        }
        for (std::size_t i = 0; i < g.num_plaquettes(); i++) {
            Charge prev = t == 0 ? 0 : syndromes[t - 1][i];
            Plaquette p = g.plaquette(i);
            h.set({static_cast<int>(t) + 1, p.x, p.y}, d.sub(syndromes[t][i], prev));
        }
    }
    return h;
}

ErrorLayer project_correction(const CorrectionHistory &F, QuditDim d) {
    ErrorLayer out = F.at(1);
    for (int t = 2; t <= F.time_steps(); t++) {
        out.compose(F.at(t), d);
    }
    return out;
}

nlohmann::json to_json(const ChangesHistory &h) {
    nlohmann::json defects = nlohmann::json::array();
    for (const auto &def : h.defects()) {
        defects.push_back({def.at.t, def.at.x, def.at.y, def.charge});
    }
    return {{"L", h.distance()}, {"T", h.time_steps()}, {"d", h.dim().value()}, {"defects", defects}};
}

}  // namespace qhdrg
