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
#include <vector>

#include "qvision/phototransduction.hpp"

namespace qvision {

/// Lattice units per degree of visual angle.
inline constexpr double kDefaultLatticePerDegree = 10.0;
/// sigma_surround / sigma_center of every DoG field.
inline constexpr double kSurroundRatio = 3.0;
/// Spontaneous ganglion firing rate, spikes/s.
inline constexpr double kBaselineRate = 10.0;
/// Spikes/s per unit of receptive-field drive.
inline constexpr double kRateGain = 100.0;
/// Receptors converging on one ganglion cell.
inline constexpr int kReceptorsPerGanglion = 200;

enum class Polarity { OnCenter, OffCenter };
enum class CellClass { X, Y, W };

std::string_view to_string(Polarity polarity);
std::string_view to_string(CellClass cell_class);

/// Receptive field diameter in degrees: X 1, Y 3, W 3.
double field_extent_deg(CellClass cell_class);

/// Grid of graded photoreceptor potentials, row-major.
class ReceptorMosaic {
   public:
    /// Throws std::invalid_argument on size mismatch or potentials outside [-70, -40] mV.
    ReceptorMosaic(int width, int height, std::vector<double> potentials_mv);

    static ReceptorMosaic uniform(int width, int height, double potential_mv);
    /// Runs every intensity in [0, 1] through membrane_potential.
    static ReceptorMosaic from_intensities(int width, int height, std::span<const double> intensities);

    int width() const {
        return width_;
    }
    int height() const {
        return height_;
    }
    double at(int x, int y) const {
        return potentials_[static_cast<std::size_t>(y) * width_ + x];
    }
    std::span<const double> potentials() const {
        return potentials_;
    }

   private:
    int width_;
    int height_;
    std::vector<double> potentials_;
};

/// Continuous bipolar-cell output; reads outside the grid return 0.
class DriveField {
   public:
    DriveField(int width, int height, std::vector<double> values);

    int width() const {
        return width_;
    }
    int height() const {
        return height_;
    }
    double at(int x, int y) const {
        if (x < 0 || y < 0 || x >= width_ || y >= height_) {
            return 0.0;
        }
        return values_[static_cast<std::size_t>(y) * width_ + x];
    }
    std::span<const double> values() const {
        return values_;
    }

   private:
    int width_;
    int height_;
    std::vector<double> values_;
};

/// Balanced difference-of-Gaussians kernel on a disc of radius radius().
class ReceptiveField {
   public:
    ReceptiveField() = default;

    /// Field covering a disc of diameter `extent_lattice`; sigma_surround is a
    /// third of the disc radius and sigma_center a third of that.
    static ReceptiveField difference_of_gaussians(Polarity polarity, double extent_lattice);

    Polarity polarity() const {
        return polarity_;
    }
    double sigma_center() const {
        return sigma_center_;
    }
    double sigma_surround() const {
        return sigma_surround_;
    }
    int radius() const {
        return radius_;
    }
    /// Weight at offset (dx, dy) from the field center; 0 outside the disc.
    double weight(int dx, int dy) const;
    std::span<const double> kernel() const {
        return kernel_;
    }
    double kernel_sum() const;
    /// Diameter (lattice units) of the disc holding every center-sign weight.
    double center_diameter() const;
    /// Diameter (lattice units) of the full field disc.
    double extent() const {
        return 2.0 * radius_;
    }

   private:
    Polarity polarity_ = Polarity::OnCenter;
    double sigma_center_ = 0.0;
    double sigma_surround_ = 0.0;
    int radius_ = 0;
    std::vector<double> kernel_;
};

struct GanglionCell {
    std::uint32_t id = 0;
    CellClass cell_class = CellClass::X;
    ReceptiveField field;
    GridPoint position;
    double field_extent_deg = 0.0;
    double lattice_per_degree = kDefaultLatticePerDegree;

    /// True if receptor `p` lies within the field disc.
    bool covers(GridPoint p) const;
};

GanglionCell make_ganglion_cell(std::uint32_t id, CellClass cell_class, Polarity polarity, GridPoint position,
                                double lattice_per_degree = kDefaultLatticePerDegree);

struct SpikeTrain {
    double rate = 0.0;
    /// Response concentrated at stimulus onset and offset (Y cells).
    bool transient = false;
    /// W cells report luminance only and ignore the spatial drive.
    bool luminance_only = false;
};

struct RateParams {
    double baseline = kBaselineRate;
    double gain = kRateGain;
};

/// Per-receptor graded drive: 0 in the dark, 1 at the light floor. No thresholding.
DriveField bipolar_relay(const ReceptorMosaic &mosaic);

/// Correlation of the cell's kernel with `field` at the cell position, zero padded.
double apply_receptive_field(const DriveField &field, const GanglionCell &cell);

SpikeTrain encode_spikes(double drive, CellClass cell_class, const RateParams &params = {});

struct SpotResponse {
    double diameter_deg;
    double drive;
    double rate;
};

/// Response to a centered full-intensity spot of each diameter on a dark
/// background. Throws std::invalid_argument unless diameters are ascending and non-negative.
std::vector<SpotResponse> spot_response_curve(const GanglionCell &cell, std::span<const double> diameters_deg,
                                              const RateParams &params = {});

struct ConvergenceOptions {
    CellClass cell_class = CellClass::Y;
    int receptors_per_cell = kReceptorsPerGanglion;
    double lattice_per_degree = kDefaultLatticePerDegree;
};

/// Tiles co-located on/off cell pairs on a square grid whose spacing gives
/// `receptors_per_cell` receptors per ganglion cell. Throws std::invalid_argument
/// if the mosaic cannot hold one full field.
std::vector<GanglionCell> build_convergent_retina(int width, int height, const ConvergenceOptions &options = {});

}  // namespace qvision
