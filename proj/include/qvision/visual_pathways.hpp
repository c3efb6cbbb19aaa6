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
#include <string>
#include <string_view>
#include <vector>

#include "qvision/retina_network.hpp"

namespace qvision {

/// Share of LGN capacity given to the central band.
inline constexpr double kCentralShare = 0.65;
/// Central band boundary, inclusive.
inline constexpr double kCentralBandDeg = 20.0;

enum class Eye { Left, Right };
enum class Hemiretina { Nasal, Temporal };
enum class LgnSide { LeftLGN, RightLGN };
enum class LgnDivision { Magnocellular, Parvocellular };

std::string_view to_string(Eye eye);
std::string_view to_string(Hemiretina hemiretina);
std::string_view to_string(LgnSide side);
std::string_view to_string(LgnDivision division);

struct RetinalFiber {
    std::uint32_t id = 0;
    Eye eye = Eye::Left;
    Hemiretina hemiretina = Hemiretina::Nasal;
    double eccentricity_deg = 0.0;
    CellClass cell_class = CellClass::X;
};

/// Throws std::invalid_argument on negative eccentricity.
RetinalFiber make_fiber(std::uint32_t id, Eye eye, Hemiretina hemiretina, double eccentricity_deg,
                        CellClass cell_class);

class LgnAssignment {
   public:
    /// Throws std::invalid_argument unless lamina is 1..6 and consistent with division.
    LgnAssignment(LgnSide side, int lamina, LgnDivision division);

    LgnSide side() const {
        return side_;
    }
    int lamina() const {
        return lamina_;
    }
    LgnDivision division() const {
        return division_;
    }

   private:
    LgnSide side_;
    int lamina_;
    LgnDivision division_;
};

/// Laminae 1-2 are magnocellular, 3-6 parvocellular.
LgnDivision division_of(int lamina);

/// Nasal fibers cross to the contralateral LGN; temporal fibers stay ipsilateral.
LgnSide chiasm_route(const RetinalFiber &fiber);

bool is_ipsilateral(Eye eye, LgnSide side);

/// Laminae receiving ipsilateral input {2, 3, 5} or contralateral input {1, 4, 6}.
std::span<const int> eligible_laminae(bool ipsilateral);

/// Y fibers go to the lowest eligible magnocellular lamina, X fibers to the
/// lowest eligible parvocellular one. Throws std::invalid_argument for W fibers,
/// which leave the geniculate path.
LgnAssignment lamina_route(const RetinalFiber &fiber, LgnSide side);

LgnAssignment route_fiber(const RetinalFiber &fiber);

/// Hemiretina that sees a point at horizontal visual-field position `field_x`
/// (negative = left of fixation) through `eye`.
Hemiretina hemiretina_for(Eye eye, double field_x);

struct AllocationEntry {
    std::uint32_t fiber_id;
    /// First LGN cell index assigned to the fiber.
    std::size_t start;
    std::size_t count;
};

struct Allocation {
    std::size_t central_capacity = 0;
    std::size_t peripheral_capacity = 0;
    /// Entries ordered by eccentricity, then fiber id.
    std::vector<AllocationEntry> entries;

    std::size_t total() const {
        return central_capacity + peripheral_capacity;
    }
};

/// Splits `lgn_capacity` cells between fibers within 20 degrees (65%) and beyond
/// (35%), equally per fiber within a band, in retinotopic order. When one band
/// is empty the other receives everything. Throws std::invalid_argument on an
/// empty list or when capacity is below fibers / 10.
Allocation magnification_allocate(std::span<const RetinalFiber> fibers, std::size_t lgn_capacity);

/// One row per fiber: fiber id, eye, hemiretina, class, side, lamina.
/// W fibers are written with side and lamina "extrastriate".
std::string assignment_table_csv(std::span<const RetinalFiber> fibers, std::uint64_t seed);

}  // namespace qvision
