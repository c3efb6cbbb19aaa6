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

#include "qvision/cortex_v1.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <tuple>

namespace qvision {

BoolGate::BoolGate(GateKind kind, std::size_t arity) : kind_(kind), arity_(arity) {
    bool ok = kind == GateKind::Not ? arity == 1 : arity >= 2;
    if (!ok) {
        throw std::invalid_argument("BoolGate: invalid arity " + std::to_string(arity));
    }
}

bool gate_eval(const BoolGate &gate, const std::vector<bool> &inputs) {
    if (inputs.size() != gate.arity()) {
        throw std::invalid_argument("gate_eval: expected " + std::to_string(gate.arity()) + " inputs, got " +
                                    std::to_string(inputs.size()));
    }
    switch (gate.kind()) {
        case GateKind::Not:
            return !inputs[0];
        case GateKind::And:
            return std::all_of(inputs.begin(), inputs.end(), [](bool b) { return b; });
        case GateKind::Or:
            return std::any_of(inputs.begin(), inputs.end(), [](bool b) { return b; });
    }
    throw std::logic_error("unknown GateKind");
}

SimpleCell::SimpleCell(std::uint32_t id, Eye eye, double orientation, GridPoint center,
                       std::vector<Subfield> subfields)
    : id_(id), eye_(eye), orientation_(orientation), center_(center), subfields_(std::move(subfields)) {
    if (subfields_.size() < 3) {
        throw std::invalid_argument("SimpleCell: needs at least 3 subfields");
    }
    if (!(orientation >= 0.0 && orientation < std::numbers::pi)) {
        throw std::invalid_argument("SimpleCell: orientation must be in [0, pi)");
    }
    double nx = -std::sin(orientation);
    double ny = std::cos(orientation);
    for (const Subfield &s : subfields_) {
        double off = std::abs((s.position.x - center.x) * nx + (s.position.y - center.y) * ny);
        if (off > kCollinearityTolerance) {
            throw std::invalid_argument("SimpleCell: subfield " + std::to_string(s.lgn_id) + " is " +
                                        std::to_string(off) + " lattice units off the cell axis");
        }
    }
}

ComplexCell::ComplexCell(std::uint32_t id, std::span<const SimpleCell> simple_cells,
                         std::vector<std::uint32_t> members)
    : id_(id), eye_(Eye::Left), orientation_(0.0), members_(std::move(members)) {
    if (members_.size() < 2) {
        throw std::invalid_argument("ComplexCell: needs at least 2 members");
    }
    for (std::uint32_t m : members_) {
        if (m >= simple_cells.size()) {
            throw std::invalid_argument("ComplexCell: unknown simple cell " + std::to_string(m));
        }
    }
    const SimpleCell &first = simple_cells[members_.front()];
    eye_ = first.eye();
    orientation_ = first.orientation();
    field_min_ = first.subfields().front().position;
    field_max_ = field_min_;
    for (std::uint32_t m : members_) {
        const SimpleCell &s = simple_cells[m];
        if (s.orientation() != orientation_) {
            throw std::invalid_argument("ComplexCell: members must share one orientation");
        }
        for (const Subfield &f : s.subfields()) {
            field_min_ = {std::min(field_min_.x, f.position.x), std::min(field_min_.y, f.position.y)};
            field_max_ = {std::max(field_max_.x, f.position.x), std::max(field_max_.y, f.position.y)};
        }
    }
}

bool simple_response(const SimpleCell &cell, const RateMap &lgn_rates, double baseline) {
    bool all = true;
    for (const Subfield &s : cell.subfields()) {
        // .at() so a dangling reference is reported even after the result is known.
        all = (lgn_rates.at(s.lgn_id) > baseline) && all;
    }
    return all;
}

bool complex_response(const ComplexCell &cell, const FiringMap &simple_bits) {
    bool any = false;
    for (std::uint32_t m : cell.members()) {
        any = simple_bits.at(m) || any;
    }
    return any;
}

std::size_t HypercolumnSheet::orientation_count() const {
    return static_cast<std::size_t>(std::lround(std::numbers::pi / orientation_step));
}

HypercolumnSheet build_hypercolumn_sheet(int cols, int rows, double orientation_step, int spacing, GridPoint origin) {
    if (cols <= 0 || rows <= 0 || spacing <= 0) {
        throw std::invalid_argument("build_hypercolumn_sheet: empty sheet");
    }
    if (!(orientation_step > 0.0) || orientation_step > std::numbers::pi) {
        throw std::invalid_argument("build_hypercolumn_sheet: orientation step must be in (0, pi]");
    }
    double n_real = std::numbers::pi / orientation_step;
    long n = std::lround(n_real);
    if (std::abs(n_real - static_cast<double>(n)) > 1e-9) {
        throw std::invalid_argument("build_hypercolumn_sheet: orientation step does not divide pi");
    }
    std::vector<double> orientations;
    for (long k = 0; k < n; ++k) {
        orientations.push_back(static_cast<double>(k) * std::numbers::pi / static_cast<double>(n));
    }

    HypercolumnSheet sheet;
    sheet.cols = cols;
    sheet.rows = rows;
    sheet.spacing = spacing;
    sheet.orientation_step = orientation_step;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            Hypercolumn h;
            h.index = sheet.hypercolumns.size();
            h.col = c;
            h.row = r;
            h.position = {origin.x + spacing / 2 + c * spacing, origin.y + spacing / 2 + r * spacing};
            h.left = {Eye::Left, orientations};
            h.right = {Eye::Right, orientations};
            sheet.hypercolumns.push_back(std::move(h));
        }
    }
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            std::size_t here = static_cast<std::size_t>(r) * cols + c;
            for (std::size_t k = 0; k < orientations.size(); ++k) {
                if (c + 1 < cols) {
                    sheet.links.push_back({here, here + 1, k});
                }
                if (r + 1 < rows) {
                    sheet.links.push_back({here, here + static_cast<std::size_t>(cols), k});
                }
            }
        }
    }
    return sheet;
}

double max_orientation_gap(const OcularColumn &column) {
    if (column.orientations.empty()) {
        return std::numbers::pi;
    }
    std::vector<double> sorted = column.orientations;
    std::sort(sorted.begin(), sorted.end());
    double gap = sorted.front() + std::numbers::pi - sorted.back();
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        gap = std::max(gap, sorted[i] - sorted[i - 1]);
    }
    return gap;
}

namespace {

GridPoint round_point(double x, double y) {
    return {static_cast<int>(std::lround(x)), static_cast<int>(std::lround(y))};
}

}  // namespace

V1Circuit wire_v1(const HypercolumnSheet &sheet, const WiringOptions &options) {
    if (options.subfield_count < 3 || options.member_count < 2 || options.subfield_spacing <= 0 ||
        options.member_spacing <= 0) {
        throw std::invalid_argument("wire_v1: need >= 3 subfields, >= 2 members, positive spacings");
    }
    V1Circuit circuit;
    std::map<std::tuple<int, int, int>, LgnCellId> site_ids;
    auto site_for = [&](Eye eye, GridPoint p) {
        auto key = std::make_tuple(static_cast<int>(eye), p.x, p.y);
        auto it = site_ids.find(key);
        if (it != site_ids.end()) {
            return it->second;
        }
        auto id = static_cast<LgnCellId>(circuit.sites.size());
        circuit.sites.push_back({id, eye, p});
        site_ids.emplace(key, id);
        return id;
    };

    for (const Hypercolumn &h : sheet.hypercolumns) {
        for (Eye eye : {Eye::Left, Eye::Right}) {
            const OcularColumn &oc = h.ocular(eye);
            for (std::size_t k = 0; k < oc.orientations.size(); ++k) {
                double theta = oc.orientations[k];
                double ux = std::cos(theta);
                double uy = std::sin(theta);
                std::vector<std::uint32_t> members;
                for (int m = 0; m < options.member_count; ++m) {
                    double shift = (m - (options.member_count - 1) / 2.0) * options.member_spacing;
                    GridPoint center = round_point(h.position.x - uy * shift, h.position.y + ux * shift);
                    std::vector<Subfield> subfields;
                    for (int s = 0; s < options.subfield_count; ++s) {
                        double along = (s - (options.subfield_count - 1) / 2.0) * options.subfield_spacing;
                        GridPoint offset = round_point(ux * along, uy * along);
                        GridPoint p{center.x + offset.x, center.y + offset.y};
                        subfields.push_back({site_for(eye, p), p});
                    }
                    auto id = static_cast<std::uint32_t>(circuit.simple.size());
                    circuit.simple.emplace_back(id, eye, theta, center, std::move(subfields));
                    members.push_back(id);
                }
                auto cid = static_cast<std::uint32_t>(circuit.complex.size());
                circuit.complex.emplace_back(cid, circuit.simple, std::move(members));
                circuit.addresses.push_back({h.index, eye, k});
            }
        }
    }
    return circuit;
}

RateMap geniculate_rates(const V1Circuit &circuit, const DriveField &left, const DriveField &right,
                         const RateParams &params, double lattice_per_degree) {
    RateMap rates;
    rates.reserve(circuit.sites.size());
    for (const LgnSite &site : circuit.sites) {
        GanglionCell cell = make_ganglion_cell(site.id, CellClass::X, Polarity::OnCenter, site.position,
                                               lattice_per_degree);
        double drive = apply_receptive_field(site.eye == Eye::Left ? left : right, cell);
        rates.emplace(site.id, encode_spikes(drive, CellClass::X, params).rate);
    }
    return rates;
}

V1Activation v1_activation(const V1Circuit &circuit, const RateMap &lgn_rates, const RateParams &params) {
    V1Activation out;
    out.simple_fired.resize(circuit.simple.size());
    out.simple_mv.resize(circuit.simple.size(), kCortexRestMv);
    FiringMap bits;
    bits.reserve(circuit.simple.size());
    for (const SimpleCell &cell : circuit.simple) {
        bool fired = simple_response(cell, lgn_rates, params.baseline);
        out.simple_fired[cell.id()] = fired;
        bits.emplace(cell.id(), fired);
        if (fired) {
            double frac = 0.0;
            for (const Subfield &s : cell.subfields()) {
                frac += std::clamp((lgn_rates.at(s.lgn_id) - params.baseline) / params.gain, 0.0, 1.0);
            }
            frac /= static_cast<double>(cell.subfields().size());
            out.simple_mv[cell.id()] = kCortexActiveBaseMv + kCortexActiveSpanMv * frac;
        }
    }
    out.complex_fired.resize(circuit.complex.size());
    out.complex_mv.resize(circuit.complex.size(), kCortexRestMv);
    for (const ComplexCell &cell : circuit.complex) {
        bool fired = complex_response(cell, bits);
        out.complex_fired[cell.id()] = fired;
        if (fired) {
            double best = kCortexRestMv;
            for (std::uint32_t m : cell.members()) {
                if (out.simple_fired[m]) {
                    best = std::max(best, out.simple_mv[m]);
                }
            }
            out.complex_mv[cell.id()] = best;
        }
    }
    return out;
}

double blob_response(const DriveField &field, const Hypercolumn &hypercolumn, int spacing) {
    int half = spacing / 2;
    double total = 0.0;
    int count = 0;
    for (int y = hypercolumn.position.y - half; y < hypercolumn.position.y - half + spacing; ++y) {
        for (int x = hypercolumn.position.x - half; x < hypercolumn.position.x - half + spacing; ++x) {
            total += field.at(x, y);
            ++count;
        }
    }
    return count > 0 ? total / count : 0.0;
}

}  // namespace qvision
