// Copyright 2026 The QVision Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qvision/retina_network.hpp"
#include "qvision/visual_pathways.hpp"

namespace qvision {

inline constexpr double kCortexRestMv = -70.0;
inline constexpr double kCortexActiveBaseMv = -55.0;
inline constexpr double kCortexActiveSpanMv = 15.0;
/// Maximum distance of a subfield center from its simple cell's axis.
inline constexpr double kCollinearityTolerance = 0.5;

enum class GateKind { Not, And, Or };

class BoolGate {
   public:
    /// Throws std::invalid_argument unless arity is 1 for NOT and >= 2 otherwise.
    BoolGate(GateKind kind, std::size_t arity);

    GateKind kind() const {
        return kind_;
    }
    std::size_t arity() const {
        return arity_;
    }

   private:
    GateKind kind_;
    std::size_t arity_;
};

/// Throws std::invalid_argument if inputs.size() != gate.arity().
bool gate_eval(const BoolGate &gate, const std::vector<bool> &inputs);

using LgnCellId = std::uint32_t;
using RateMap = std::unordered_map<LgnCellId, double>;
using FiringMap = std::unordered_map<std::uint32_t, bool>;

struct Subfield {
    LgnCellId lgn_id;
    GridPoint position;
};

/// AND over geniculate subfields lined up along an orientation.
class SimpleCell {
   public:
    /// Throws std::invalid_argument unless there are >= 3 subfields, orientation
    /// is in [0, pi), and every subfield is within 0.5 lattice units of the line
    /// through `center` at `orientation`.
    SimpleCell(std::uint32_t id, Eye eye, double orientation, GridPoint center, std::vector<Subfield> subfields);

    std::uint32_t id() const {
        return id_;
    }
    Eye eye() const {
        return eye_;
    }
    double orientation() const {
        return orientation_;
    }
    GridPoint center() const {
        return center_;
    }
    std::span<const Subfield> subfields() const {
        return subfields_;
    }

   private:
    std::uint32_t id_;
    Eye eye_;
    double orientation_;
    GridPoint center_;
    std::vector<Subfield> subfields_;
};

/// OR over simple cells sharing one orientation.
class ComplexCell {
   public:
    /// `members` are indices into `simple_cells`. Throws std::invalid_argument
    /// for fewer than 2 members, unknown indices, or mixed orientations.
    ComplexCell(std::uint32_t id, std::span<const SimpleCell> simple_cells, std::vector<std::uint32_t> members);

    std::uint32_t id() const {
        return id_;
    }
    Eye eye() const {
        return eye_;
    }
    double orientation() const {
        return orientation_;
    }
    std::span<const std::uint32_t> members() const {
        return members_;
    }
    /// Bounding box of all member subfields, inclusive.
    GridPoint field_min() const {
        return field_min_;
    }
    GridPoint field_max() const {
        return field_max_;
    }

   private:
    std::uint32_t id_;
    Eye eye_;
    double orientation_;
    std::vector<std::uint32_t> members_;
    GridPoint field_min_;
    GridPoint field_max_;
};

/// 1 iff every subfield's rate exceeds `baseline`. Throws std::out_of_range on a missing rate.
bool simple_response(const SimpleCell &cell, const RateMap &lgn_rates, double baseline = kBaselineRate);

/// 1 iff any member fires. Throws std::out_of_range on a missing member.
bool complex_response(const ComplexCell &cell, const FiringMap &simple_bits);

struct OcularColumn {
    Eye eye;
    std::vector<double> orientations;
};

struct Hypercolumn {
    std::size_t index = 0;
    /// Column and row in the sheet.
    int col = 0;
    int row = 0;
    /// Retinotopic center in receptor-lattice coordinates.
    GridPoint position;
    OcularColumn left{Eye::Left, {}};
    OcularColumn right{Eye::Right, {}};
    int blobs = 1;

    const OcularColumn &ocular(Eye eye) const {
        return eye == Eye::Left ? left : right;
    }
};

/// Connects equal-orientation columns of neighboring hypercolumns.
struct HorizontalLink {
    std::size_t from;
    std::size_t to;
    std::size_t orientation_index;
};

struct HypercolumnSheet {
    int cols = 0;
    int rows = 0;
    int spacing = 0;
    double orientation_step = 0.0;
    std::vector<Hypercolumn> hypercolumns;
    std::vector<HorizontalLink> links;

    std::size_t orientation_count() const;
};

/// Tiles cols x rows hypercolumns `spacing` lattice units apart, the first
/// centered at origin + spacing/2. Throws std::invalid_argument if
/// `orientation_step` does not divide pi or the grid is empty.
HypercolumnSheet build_hypercolumn_sheet(int cols, int rows, double orientation_step, int spacing = 16,
                                         GridPoint origin = {0, 0});

/// Largest angular gap between successive orientations, wrapping at pi.
double max_orientation_gap(const OcularColumn &column);

struct WiringOptions {
    int subfield_count = 3;
    /// Lattice distance between neighboring subfields along the cell axis.
    int subfield_spacing = 6;
    /// Simple cells pooled by each complex cell, offset perpendicular to the axis.
    int member_count = 5;
    int member_spacing = 3;
};

struct LgnSite {
    LgnCellId id;
    Eye eye;
    GridPoint position;
};

/// Location of one complex cell (orientation column) in the sheet.
struct ColumnAddress {
    std::size_t hypercolumn;
    Eye eye;
    std::size_t orientation_index;
};

struct V1Circuit {
    /// On-center X geniculate cells the circuit reads from, indexed by id.
    std::vector<LgnSite> sites;
    std::vector<SimpleCell> simple;
    std::vector<ComplexCell> complex;
    /// Parallel to `complex`.
    std::vector<ColumnAddress> addresses;
};

/// One complex cell per (hypercolumn, eye, orientation), pooling `member_count`
/// parallel simple cells centered on the hypercolumn.
V1Circuit wire_v1(const HypercolumnSheet &sheet, const WiringOptions &options = {});

/// Relays each site's on-center X ganglion rate, read from the drive field of its eye.
RateMap geniculate_rates(const V1Circuit &circuit, const DriveField &left, const DriveField &right,
                         const RateParams &params = {}, double lattice_per_degree = kDefaultLatticePerDegree);

struct V1Activation {
    std::vector<bool> simple_fired;
    std::vector<double> simple_mv;
    std::vector<bool> complex_fired;
    std::vector<double> complex_mv;
};

/// Evaluates every simple cell, then every complex cell. Firing simple cells sit
/// at -55 mV plus 15 mV times their mean supra-baseline drive fraction; complex
/// cells take the highest firing member's potential; silent cells rest at -70 mV.
V1Activation v1_activation(const V1Circuit &circuit, const RateMap &lgn_rates, const RateParams &params = {});

/// Orientation-blind blob response: mean bipolar drive over the hypercolumn patch.
double blob_response(const DriveField &field, const Hypercolumn &hypercolumn, int spacing);

}  // namespace qvision
