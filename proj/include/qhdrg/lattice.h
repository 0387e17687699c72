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

#ifndef QHDRG_LATTICE_H
#define QHDRG_LATTICE_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace qhdrg {

/// An element of Z_d. Always stored reduced into [0, d-1].
using Charge = std::uint32_t;

/// The qudit dimension d >= 2. Owns all modular arithmetic on charges.
class QuditDim {
   public:
    explicit QuditDim(std::uint32_t d);

    std::uint32_t value() const {
        return d_;
    }
    Charge add(Charge a, Charge b) const {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Charge>(s >= d_ ? s - d_ : s);
    }
    Charge sub(Charge a, Charge b) const {
        return a >= b ? a - b : static_cast<Charge>(std::uint64_t{a} + d_ - b);
    }
    Charge neg(Charge a) const {
        return a == 0 ? 0 : d_ - a;
    }
    Charge reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(d_);
        return static_cast<Charge>(r < 0 ? r + d_ : r);
    }

    bool operator==(const QuditDim &) const = default;

   private:
    std::uint32_t d_;
};

/// A charge assignment over a fixed index set (edges or plaquettes).
template <typename Tag>
class ChargeField {
   public:
    ChargeField() = default;
    explicit ChargeField(std::size_t n) : charges_(n, 0) {
    }

    std::size_t size() const {
        return charges_.size();
    }
    Charge &operator[](std::size_t i) {
        return charges_[i];
    }
    Charge operator[](std::size_t i) const {
        return charges_[i];
    }
    std::span<const Charge> charges() const {
        return charges_;
    }

    bool is_zero() const {
        for (Charge c : charges_) {
            if (c != 0) {
                return false;
            }
        }
        return true;
    }

    /// Elementwise this += other (mod d). Sizes must agree.
    void compose(const ChargeField &other, QuditDim d);

    bool operator==(const ChargeField &) const = default;

   private:
    std::vector<Charge> charges_;
};

struct EdgeTag {};
struct PlaquetteTag {};

/// Exponents of X^k on each edge of one sector.
using ErrorLayer = ChargeField<EdgeTag>;
/// One round of plaquette outcomes, indexed like CodeGeometry::plaquette_index.
using SyndromeLayer = ChargeField<PlaquetteTag>;

enum class EdgeKind : std::uint8_t { Vertical, Horizontal };

/// Edge coordinates are 1-based. Vertical edges v(x,y): x in [1,L], y in [1,L].
/// Horizontal edges h(x,y): x in [1,L-1], y in [1,L-1].
struct Edge {
    EdgeKind kind;
    int x;
    int y;
    bool operator==(const Edge &) const = default;
};

/// Plaquette P(x,y), x in [1,L], y in [1,L-1].
struct Plaquette {
    int x;
    int y;
    bool operator==(const Plaquette &) const = default;
};

/// The two smooth spatial boundaries, sitting at virtual rows y=0 and y=L.
enum class SmoothBoundary : std::uint8_t { South, North };

using Site = std::variant<Plaquette, SmoothBoundary>;

/// One plaquette touched by an edge, and the sign of that edge in the plaquette's stabilizer.
struct Incidence {
    std::uint32_t plaquette;
    int sign;
};

/// Distance-L planar surface code, X-error / plaquette sector.
///
/// P(x,y) is bordered below by v(x,y), above by v(x,y+1), left by h(x-1,y) and right by h(x,y).
/// The plaquette operator carries Z on the bottom and left edges and Z^-1 on the top and right
/// edges, so an X^k on an edge adds +k to the plaquette above/right of it and -k to the one
/// below/left. Rows x=1 and x=L are rough (three-body plaquettes); edges v(x,1) and v(x,L)
/// touch a single plaquette.
class CodeGeometry {
   public:
    explicit CodeGeometry(int distance);

    int distance() const {
        return L_;
    }
    std::size_t num_edges() const {
        return stencils_.size();
    }
    std::size_t num_plaquettes() const {
        return static_cast<std::size_t>(L_) * (L_ - 1);
    }

    std::size_t vertical_index(int x, int y) const {
        return static_cast<std::size_t>(y - 1) * L_ + (x - 1);
    }
    std::size_t horizontal_index(int x, int y) const {
        return static_cast<std::size_t>(L_) * L_ + static_cast<std::size_t>(y - 1) * (L_ - 1) + (x - 1);
    }
    std::size_t index(const Edge &e) const {
        return e.kind == EdgeKind::Vertical ? vertical_index(e.x, e.y) : horizontal_index(e.x, e.y);
    }
    std::size_t plaquette_index(int x, int y) const {
        return static_cast<std::size_t>(y - 1) * L_ + (x - 1);
    }
    std::size_t plaquette_index(const Plaquette &p) const {
        return plaquette_index(p.x, p.y);
    }
    Plaquette plaquette(std::size_t index) const {
        return {static_cast<int>(index % L_) + 1, static_cast<int>(index / L_) + 1};
    }
    Edge edge(std::size_t index) const;

    bool contains(const Plaquette &p) const {
        return p.x >= 1 && p.x <= L_ && p.y >= 1 && p.y <= L_ - 1;
    }
    bool contains(const Edge &e) const;

    /// The one or two plaquettes an edge borders.
    std::span<const Incidence> incidences(std::size_t edge) const {
        const auto &s = stencils_[edge];
        return {s.incidences.data(), s.count};
    }

    ErrorLayer zero_errors() const {
        return ErrorLayer(num_edges());
    }
    SyndromeLayer zero_syndrome() const {
        return SyndromeLayer(num_plaquettes());
    }

   private:
    struct Stencil {
        std::array<Incidence, 2> incidences;
        std::uint8_t count;
    };
    int L_;
    std::vector<Stencil> stencils_;
};

/// Throws std::invalid_argument for L < 2.
CodeGeometry build_geometry(int distance);

SyndromeLayer compute_syndrome(const ErrorLayer &e, const CodeGeometry &g, QuditDim d);

/// Accumulates into `out` the edge operator moving charge `a` from `from` to `to` along a
/// monotone path (x first, then y). The operator shifts the syndrome by -a at `from` and by +a
/// at `to`; a boundary endpoint absorbs its share with no syndrome change.
void add_transport(ErrorLayer &out, const Site &from, const Site &to, Charge a, const CodeGeometry &g, QuditDim d);

ErrorLayer transport_correction(const Site &from, const Site &to, Charge a, const CodeGeometry &g, QuditDim d);

/// Single-step transport between neighbouring plaquettes (or a boundary-row plaquette and its
/// boundary). Exposed for the decoders, which walk paths one step at a time.
void add_step(ErrorLayer &out, const Plaquette &from, const Site &to, Charge a, const CodeGeometry &g, QuditDim d);

/// Sum of the vertical-edge charges on row `row` (default 1). For an error with trivial
/// syndrome this counts the net number of logical X strings crossing between the smooth
/// boundaries; it is 0 for every product of vertex operators.
Charge logical_class(const ErrorLayer &e, const CodeGeometry &g, QuditDim d, int row = 1);

bool is_stabilizer(const ErrorLayer &e, const CodeGeometry &g, QuditDim d);

}  // namespace qhdrg

#endif
