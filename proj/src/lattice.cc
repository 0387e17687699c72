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

#include "qhdrg/lattice.h"

#include <stdexcept>
#include <string>

namespace qhdrg {

QuditDim::QuditDim(std::uint32_t d) : d_(d) {
    if (d < 2) {
        throw std::invalid_argument("qudit dimension must be >= 2, got " + std::to_string(d));
    }
}

template <typename Tag>
void ChargeField<Tag>::compose(const ChargeField &other, QuditDim d) {
    if (other.size() != size()) {
        throw std::invalid_argument("ChargeField::compose: size mismatch");
    }
    for (std::size_t i = 0; i < charges_.size(); i++) {
        charges_[i] = d.add(charges_[i], other.charges_[i]);
    }
}

template class ChargeField<EdgeTag>;
template class ChargeField<PlaquetteTag>;

CodeGeometry::CodeGeometry(int distance) : L_(distance) {
    if (distance < 2) {
        throw std::invalid_argument("code distance must be >= 2, got " + std::to_string(distance));
    }
    const std::size_t n = static_cast<std::size_t>(L_) * L_ + static_cast<std::size_t>(L_ - 1) * (L_ - 1);
    stencils_.resize(n);

    for (int y = 1; y <= L_; y++) {
        for (int x = 1; x <= L_; x++) {
            Stencil s{};
            // +1 on the plaquette above (its bottom edge), -1 on the one below (its top edge).
            if (y <= L_ - 1) {
                s.incidences[s.count++] = {static_cast<std::uint32_t>(plaquette_index(x, y)), +1};
            }
            if (y >= 2) {
                s.incidences[s.count++] = {static_cast<std::uint32_t>(plaquette_index(x, y - 1)), -1};
            }
            stencils_[vertical_index(x, y)] = s;
        }
    }
    for (int y = 1; y <= L_ - 1; y++) {
        for (int x = 1; x <= L_ - 1; x++) {
            Stencil s{};
            // -1 on the plaquette to the left (its right edge), +1 on the right (its left edge).
            s.incidences[s.count++] = {static_cast<std::uint32_t>(plaquette_index(x, y)), -1};
            s.incidences[s.count++] = {static_cast<std::uint32_t>(plaquette_index(x + 1, y)), +1};
            stencils_[horizontal_index(x, y)] = s;
        }
    }
}

Edge CodeGeometry::edge(std::size_t index) const {
    const std::size_t nv = static_cast<std::size_t>(L_) * L_;
    if (index < nv) {
        return {EdgeKind::Vertical, static_cast<int>(index % L_) + 1, static_cast<int>(index / L_) + 1};
    }
    index -= nv;
    return {EdgeKind::Horizontal, static_cast<int>(index % (L_ - 1)) + 1, static_cast<int>(index / (L_ - 1)) + 1};
}

bool CodeGeometry::contains(const Edge &e) const {
    if (e.kind == EdgeKind::Vertical) {
        return e.x >= 1 && e.x <= L_ && e.y >= 1 && e.y <= L_;
    }
    return e.x >= 1 && e.x <= L_ - 1 && e.y >= 1 && e.y <= L_ - 1;
}

CodeGeometry build_geometry(int distance) {
    return CodeGeometry(distance);
}

SyndromeLayer compute_syndrome(const ErrorLayer &e, const CodeGeometry &g, QuditDim d) {
    if (e.size() != g.num_edges()) {
        throw std::invalid_argument("compute_syndrome: error layer does not match geometry");
    }
    const int L = g.distance();
    SyndromeLayer s = g.zero_syndrome();
    for (int y = 1; y <= L - 1; y++) {
        for (int x = 1; x <= L; x++) {
            std::int64_t acc = std::int64_t{e[g.vertical_index(x, y)]} - e[g.vertical_index(x, y + 1)];
            if (x > 1) {
                acc += e[g.horizontal_index(x - 1, y)];
            }
            if (x < L) {
                acc -= e[g.horizontal_index(x, y)];
            }
            s[g.plaquette_index(x, y)] = d.reduce(acc);
        }
    }
    return s;
}

void add_step(ErrorLayer &out, const Plaquette &from, const Site &to, Charge a, const CodeGeometry &g, QuditDim d) {
    const int L = g.distance();
    auto put = [&](std::size_t edge, Charge m) { out[edge] = d.add(out[edge], m); };

    if (const auto *b = std::get_if<SmoothBoundary>(&to)) {
        if (*b == SmoothBoundary::South && from.y == 1) {
            put(g.vertical_index(from.x, 1), d.neg(a));
            return;
        }
        if (*b == SmoothBoundary::North && from.y == L - 1) {
            put(g.vertical_index(from.x, L), a);
            return;
        }
        throw std::invalid_argument("add_step: plaquette is not adjacent to that boundary");
    }
    const auto &p = std::get<Plaquette>(to);
    if (p.y == from.y && p.x == from.x + 1) {
        put(g.horizontal_index(from.x, from.y), a);
    } else if (p.y == from.y && p.x == from.x - 1) {
        put(g.horizontal_index(p.x, from.y), d.neg(a));
    } else if (p.x == from.x && p.y == from.y + 1) {
        put(g.vertical_index(from.x, p.y), a);
    } else if (p.x == from.x && p.y == from.y - 1) {
        put(g.vertical_index(from.x, from.y), d.neg(a));
    } else {
        throw std::invalid_argument("add_step: plaquettes are not neighbours");
    }
}

namespace {

void walk(ErrorLayer &out, Plaquette from, const Plaquette &to, Charge a, const CodeGeometry &g, QuditDim d) {
    while (from.x != to.x) {
        Plaquette next{from.x + (to.x > from.x ? 1 : -1), from.y};
        add_step(out, from, next, a, g, d);
        from = next;
    }
    while (from.y != to.y) {
        Plaquette next{from.x, from.y + (to.y > from.y ? 1 : -1)};
        add_step(out, from, next, a, g, d);
        from = next;
    }
}

void walk_to_boundary(ErrorLayer &out, const Plaquette &from, SmoothBoundary b, Charge a, const CodeGeometry &g, QuditDim d) {
    Plaquette edge_row{from.x, b == SmoothBoundary::South ? 1 : g.distance() - 1};
    walk(out, from, edge_row, a, g, d);
    add_step(out, edge_row, b, a, g, d);
}

}  // namespace

void add_transport(ErrorLayer &out, const Site &from, const Site &to, Charge a, const CodeGeometry &g, QuditDim d) {
    if (out.size() != g.num_edges()) {
        throw std::invalid_argument("add_transport: error layer does not match geometry");
    }
    const auto *pf = std::get_if<Plaquette>(&from);
    const auto *pt = std::get_if<Plaquette>(&to);
    if ((pf && !g.contains(*pf)) || (pt && !g.contains(*pt))) {
        throw std::invalid_argument("add_transport: plaquette outside the lattice");
    }
    if (pf && pt) {
        if (*pf == *pt) {
            throw std::invalid_argument("add_transport: endpoints must be distinct");
        }
        walk(out, *pf, *pt, a, g, d);
    } else if (pf) {
        walk_to_boundary(out, *pf, std::get<SmoothBoundary>(to), a, g, d);
    } else if (pt) {
        // Pulling charge a out of a boundary is pushing -a into it.
        walk_to_boundary(out, *pt, std::get<SmoothBoundary>(from), d.neg(a), g, d);
    } else {
        throw std::invalid_argument("add_transport: at least one endpoint must be a plaquette");
    }
}

ErrorLayer transport_correction(const Site &from, const Site &to, Charge a, const CodeGeometry &g, QuditDim d) {
    ErrorLayer out = g.zero_errors();
    add_transport(out, from, to, a, g, d);
    return out;
}

Charge logical_class(const ErrorLayer &e, const CodeGeometry &g, QuditDim d, int row) {
    if (row < 1 || row > g.distance()) {
        throw std::invalid_argument("logical_class: cut row out of range");
    }
    Charge acc = 0;
    for (int x = 1; x <= g.distance(); x++) {
        acc = d.add(acc, e[g.vertical_index(x, row)]);
    }
    return acc;
}

bool is_stabilizer(const ErrorLayer &e, const CodeGeometry &g, QuditDim d) {
    return compute_syndrome(e, g, d).is_zero() && logical_class(e, g, d) == 0;
}

}  // namespace qhdrg
