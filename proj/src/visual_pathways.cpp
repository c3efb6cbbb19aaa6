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

#include "qvision/visual_pathways.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qvision {

std::string_view to_string(Eye eye) {
    return eye == Eye::Left ? "left" : "right";
}

std::string_view to_string(Hemiretina hemiretina) {
    return hemiretina == Hemiretina::Nasal ? "nasal" : "temporal";
}

std::string_view to_string(LgnSide side) {
    return side == LgnSide::LeftLGN ? "left_lgn" : "right_lgn";
}

std::string_view to_string(LgnDivision division) {
    return division == LgnDivision::Magnocellular ? "magno" : "parvo";
}

RetinalFiber make_fiber(std::uint32_t id, Eye eye, Hemiretina hemiretina, double eccentricity_deg,
                        CellClass cell_class) {
    if (!(eccentricity_deg >= 0.0)) {
        throw std::invalid_argument("RetinalFiber: eccentricity must be non-negative");
    }
    return {id, eye, hemiretina, eccentricity_deg, cell_class};
}

LgnDivision division_of(int lamina) {
    if (lamina < 1 || lamina > 6) {
        throw std::invalid_argument("lamina must be in 1..6");
    }
    return lamina <= 2 ? LgnDivision::Magnocellular : LgnDivision::Parvocellular;
}

LgnAssignment::LgnAssignment(LgnSide side, int lamina, LgnDivision division)
    : side_(side), lamina_(lamina), division_(division) {
    if (division_of(lamina) != division) {
        throw std::invalid_argument("LgnAssignment: lamina " + std::to_string(lamina) + " is not " +
                                    std::string(to_string(division)));
    }
}

LgnSide chiasm_route(const RetinalFiber &fiber) {
    bool left_eye = fiber.eye == Eye::Left;
    bool crosses = fiber.hemiretina == Hemiretina::Nasal;
    return (left_eye != crosses) ? LgnSide::LeftLGN : LgnSide::RightLGN;
}

bool is_ipsilateral(Eye eye, LgnSide side) {
    return (eye == Eye::Left) == (side == LgnSide::LeftLGN);
}

std::span<const int> eligible_laminae(bool ipsilateral) {
    static constexpr std::array<int, 3> kIpsi{2, 3, 5};
    static constexpr std::array<int, 3> kContra{1, 4, 6};
    return ipsilateral ? std::span<const int>(kIpsi) : std::span<const int>(kContra);
}

LgnAssignment lamina_route(const RetinalFiber &fiber, LgnSide side) {
    LgnDivision wanted;
    switch (fiber.cell_class) {
        case CellClass::Y:
            wanted = LgnDivision::Magnocellular;
            break;
        case CellClass::X:
            wanted = LgnDivision::Parvocellular;
            break;
        default:
            throw std::invalid_argument("lamina_route: W fibers project extrageniculately");
    }
    for (int lamina : eligible_laminae(is_ipsilateral(fiber.eye, side))) {
        if (division_of(lamina) == wanted) {
            return {side, lamina, wanted};
        }
    }
    throw std::logic_error("lamina_route: no eligible lamina");
}

LgnAssignment route_fiber(const RetinalFiber &fiber) {
    return lamina_route(fiber, chiasm_route(fiber));
}

Hemiretina hemiretina_for(Eye eye, double field_x) {
    // The left visual field falls on the left eye's nasal and the right eye's temporal retina.
    bool left_field = field_x < 0.0;
    return (left_field == (eye == Eye::Left)) ? Hemiretina::Nasal : Hemiretina::Temporal;
}

namespace {

void split_band(std::span<const RetinalFiber *const> band, std::size_t capacity, std::size_t start,
                std::vector<AllocationEntry> &out) {
    if (band.empty()) {
        return;
    }
    std::size_t base = capacity / band.size();
    std::size_t extra = capacity % band.size();
    // Remainder cells go to the most central fibers.
    for (std::size_t i = 0; i < band.size(); ++i) {
        std::size_t count = base + (i < extra ? 1 : 0);
        out.push_back({band[i]->id, start, count});
        start += count;
    }
}

}  // namespace

Allocation magnification_allocate(std::span<const RetinalFiber> fibers, std::size_t lgn_capacity) {
    if (fibers.empty()) {
        throw std::invalid_argument("magnification_allocate: empty fiber list");
    }
    if (lgn_capacity * 10 < fibers.size()) {
        throw std::invalid_argument("magnification_allocate: capacity below fiber count / 10");
    }
    std::vector<const RetinalFiber *> order;
    order.reserve(fibers.size());
    for (const RetinalFiber &f : fibers) {
        order.push_back(&f);
    }
    std::stable_sort(order.begin(), order.end(), [](const RetinalFiber *a, const RetinalFiber *b) {
        if (a->eccentricity_deg != b->eccentricity_deg) {
            return a->eccentricity_deg < b->eccentricity_deg;
        }
        return a->id < b->id;
    });
    auto split = std::partition_point(order.begin(), order.end(), [](const RetinalFiber *f) {
        return f->eccentricity_deg <= kCentralBandDeg;
    });
    std::span<const RetinalFiber *const> central(order.data(), static_cast<std::size_t>(split - order.begin()));
    std::span<const RetinalFiber *const> peripheral(order.data() + central.size(), order.size() - central.size());

    Allocation out;
    if (peripheral.empty()) {
        out.central_capacity = lgn_capacity;
    } else if (central.empty()) {
        out.peripheral_capacity = lgn_capacity;
    } else {
        out.central_capacity = static_cast<std::size_t>(std::llround(kCentralShare * lgn_capacity));
        out.peripheral_capacity = lgn_capacity - out.central_capacity;
    }
    out.entries.reserve(order.size());
    split_band(central, out.central_capacity, 0, out.entries);
    split_band(peripheral, out.peripheral_capacity, out.central_capacity, out.entries);
    return out;
}

std::string assignment_table_csv(std::span<const RetinalFiber> fibers, std::uint64_t seed) {
    std::ostringstream os;
    os << "# seed=" << seed << "\n";
    os << "fiber_id,eye,hemiretina,class,side,lamina\n";
    for (const RetinalFiber &f : fibers) {
        os << f.id << ',' << to_string(f.eye) << ',' << to_string(f.hemiretina) << ',' << to_string(f.cell_class)
           << ',';
        if (f.cell_class == CellClass::W) {
            os << "extrastriate,extrastriate\n";
            continue;
        }
        LgnAssignment a = route_fiber(f);
        os << to_string(a.side()) << ',' << a.lamina() << '\n';
    }
    return os.str();
}

}  // namespace qvision
