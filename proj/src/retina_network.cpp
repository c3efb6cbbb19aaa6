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

#include "qvision/retina_network.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qvision {

std::string_view to_string(Polarity polarity) {
    return polarity == Polarity::OnCenter ? "on" : "off";
}

std::string_view to_string(CellClass cell_class) {
    switch (cell_class) {
        case CellClass::X:
            return "X";
        case CellClass::Y:
            return "Y";
        case CellClass::W:
            return "W";
    }
    return "?";
}

double field_extent_deg(CellClass cell_class) {
    switch (cell_class) {
        case CellClass::X:
            return 1.0;
        case CellClass::Y:
        case CellClass::W:
            return 3.0;
    }
    throw std::logic_error("unknown CellClass");
}

ReceptorMosaic::ReceptorMosaic(int width, int height, std::vector<double> potentials_mv)
    : width_(width), height_(height), potentials_(std::move(potentials_mv)) {
    if (width <= 0 || height <= 0 ||
        potentials_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw std::invalid_argument("ReceptorMosaic: size mismatch");
    }
    for (double v : potentials_) {
        if (!(v >= kLightFloorMv && v <= kDarkPotentialMv)) {
            throw std::invalid_argument("ReceptorMosaic: potential " + std::to_string(v) +
                                        " mV outside [-70, -40]");
        }
    }
}

ReceptorMosaic ReceptorMosaic::uniform(int width, int height, double potential_mv) {
    return {width, height,
            std::vector<double>(static_cast<std::size_t>(std::max(width, 0)) * std::max(height, 0), potential_mv)};
}

ReceptorMosaic ReceptorMosaic::from_intensities(int width, int height, std::span<const double> intensities) {
    std::vector<double> v;
    v.reserve(intensities.size());
    for (double i : intensities) {
        v.push_back(membrane_potential(i));
    }
    return {width, height, std::move(v)};
}

DriveField::DriveField(int width, int height, std::vector<double> values)
    : width_(width), height_(height), values_(std::move(values)) {
    if (width <= 0 || height <= 0 ||
        values_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw std::invalid_argument("DriveField: size mismatch");
    }
}

ReceptiveField ReceptiveField::difference_of_gaussians(Polarity polarity, double extent_lattice) {
    int radius = static_cast<int>(std::lround(extent_lattice / 2.0));
    if (radius < 1) {
        throw std::invalid_argument("ReceptiveField: extent must be at least 2 lattice units");
    }
    ReceptiveField f;
    f.polarity_ = polarity;
    f.radius_ = radius;
    f.sigma_surround_ = radius / 3.0;
    f.sigma_center_ = f.sigma_surround_ / kSurroundRatio;

    int side = 2 * radius + 1;
    std::vector<double> center(static_cast<std::size_t>(side) * side, 0.0);
    std::vector<double> surround(center.size(), 0.0);
    double center_total = 0.0;
    double surround_total = 0.0;
    for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
            int r2 = dx * dx + dy * dy;
            if (r2 > radius * radius) {
                continue;
            }
            std::size_t k = static_cast<std::size_t>(dy + radius) * side + (dx + radius);
            center[k] = std::exp(-r2 / (2.0 * f.sigma_center_ * f.sigma_center_));
            surround[k] = std::exp(-r2 / (2.0 * f.sigma_surround_ * f.sigma_surround_));
            center_total += center[k];
            surround_total += surround[k];
        }
    }
    // Each lobe is normalized over the truncated disc, so the weights cancel exactly.
    double sign = polarity == Polarity::OnCenter ? 1.0 : -1.0;
    f.kernel_.resize(center.size());
    for (std::size_t k = 0; k < center.size(); ++k) {
        f.kernel_[k] = sign * (center[k] / center_total - surround[k] / surround_total);
    }
    return f;
}

double ReceptiveField::weight(int dx, int dy) const {
    if (std::abs(dx) > radius_ || std::abs(dy) > radius_) {
        return 0.0;
    }
    int side = 2 * radius_ + 1;
    return kernel_[static_cast<std::size_t>(dy + radius_) * side + (dx + radius_)];
}

double ReceptiveField::kernel_sum() const {
    double total = 0.0;
    for (double w : kernel_) {
        total += w;
    }
    return total;
}

double ReceptiveField::center_diameter() const {
    double sign = polarity_ == Polarity::OnCenter ? 1.0 : -1.0;
    double max_r2 = 0.0;
    for (int dy = -radius_; dy <= radius_; ++dy) {
        for (int dx = -radius_; dx <= radius_; ++dx) {
            if (sign * weight(dx, dy) > 0.0) {
                max_r2 = std::max(max_r2, static_cast<double>(dx * dx + dy * dy));
            }
        }
    }
    return 2.0 * std::sqrt(max_r2);
}

bool GanglionCell::covers(GridPoint p) const {
    int dx = p.x - position.x;
    int dy = p.y - position.y;
    int r = field.radius();
    return dx * dx + dy * dy <= r * r;
}

GanglionCell make_ganglion_cell(std::uint32_t id, CellClass cell_class, Polarity polarity, GridPoint position,
                                double lattice_per_degree) {
    if (!(lattice_per_degree > 0.0)) {
        throw std::invalid_argument("make_ganglion_cell: lattice_per_degree must be positive");
    }
    double extent_deg = field_extent_deg(cell_class);
    return {id,
            cell_class,
            ReceptiveField::difference_of_gaussians(polarity, extent_deg * lattice_per_degree),
            position,
            extent_deg,
            lattice_per_degree};
}

DriveField bipolar_relay(const ReceptorMosaic &mosaic) {
    std::vector<double> drive;
    drive.reserve(mosaic.potentials().size());
    for (double v : mosaic.potentials()) {
        drive.push_back(1.0 - glutamate_release(v));
    }
    return {mosaic.width(), mosaic.height(), std::move(drive)};
}

double apply_receptive_field(const DriveField &field, const GanglionCell &cell) {
    const ReceptiveField &rf = cell.field;
    int r = rf.radius();
    double total = 0.0;
    for (int dy = -r; dy <= r; ++dy) {
        for (int dx = -r; dx <= r; ++dx) {
            double w = rf.weight(dx, dy);
            if (w != 0.0) {
                total += w * field.at(cell.position.x + dx, cell.position.y + dy);
            }
        }
    }
    return total;
}

SpikeTrain encode_spikes(double drive, CellClass cell_class, const RateParams &params) {
    SpikeTrain out;
    if (cell_class == CellClass::W) {
        out.rate = params.baseline;
        out.luminance_only = true;
        return out;
    }
    out.rate = std::max(0.0, params.baseline + params.gain * drive);
    out.transient = cell_class == CellClass::Y;
    return out;
}

std::vector<SpotResponse> spot_response_curve(const GanglionCell &cell, std::span<const double> diameters_deg,
                                              const RateParams &params) {
    if (!std::is_sorted(diameters_deg.begin(), diameters_deg.end())) {
        throw std::invalid_argument("spot_response_curve: diameters must be ascending");
    }
    if (!diameters_deg.empty() && !(diameters_deg.front() >= 0.0)) {
        throw std::invalid_argument("spot_response_curve: diameters must be non-negative");
    }
    // A local mosaic just large enough for the field, with the cell at its center.
    int r = cell.field.radius();
    int side = 2 * r + 1;
    GanglionCell local = cell;
    local.position = {r, r};

    std::vector<SpotResponse> out;
    out.reserve(diameters_deg.size());
    for (double d : diameters_deg) {
        double spot_radius = d * cell.lattice_per_degree / 2.0;
        std::vector<double> intensity(static_cast<std::size_t>(side) * side, 0.0);
        if (d > 0.0) {
            for (int y = 0; y < side; ++y) {
                for (int x = 0; x < side; ++x) {
                    double dist = std::hypot(x - r, y - r);
                    if (dist <= spot_radius) {
                        intensity[static_cast<std::size_t>(y) * side + x] = 1.0;
                    }
                }
            }
        }
        DriveField drive_field = bipolar_relay(ReceptorMosaic::from_intensities(side, side, intensity));
        double drive = apply_receptive_field(drive_field, local);
        out.push_back({d, drive, encode_spikes(drive, cell.cell_class, params).rate});
    }
    return out;
}

std::vector<GanglionCell> build_convergent_retina(int width, int height, const ConvergenceOptions &options) {
    if (options.receptors_per_cell <= 0) {
        throw std::invalid_argument("build_convergent_retina: receptors_per_cell must be positive");
    }
    // Two cells (on and off) per site.
    int spacing = static_cast<int>(std::lround(std::sqrt(2.0 * options.receptors_per_cell)));
    spacing = std::max(spacing, 1);
    double extent = field_extent_deg(options.cell_class) * options.lattice_per_degree;
    int min_side = std::max(spacing, static_cast<int>(std::lround(extent)) + 1);
    if (width < min_side || height < min_side) {
        throw std::invalid_argument("build_convergent_retina: mosaic " + std::to_string(width) + "x" +
                                    std::to_string(height) + " is smaller than one field (" +
                                    std::to_string(min_side) + ")");
    }
    int cols = width / spacing;
    int rows = height / spacing;
    int x0 = (width - (cols - 1) * spacing) / 2;
    int y0 = (height - (rows - 1) * spacing) / 2;
    std::vector<GanglionCell> cells;
    cells.reserve(static_cast<std::size_t>(cols) * rows * 2);
    std::uint32_t id = 0;
    for (int j = 0; j < rows; ++j) {
        for (int i = 0; i < cols; ++i) {
            GridPoint p{x0 + i * spacing, y0 + j * spacing};
            for (Polarity pol : {Polarity::OnCenter, Polarity::OffCenter}) {
                cells.push_back(make_ganglion_cell(id++, options.cell_class, pol, p, options.lattice_per_degree));
            }
        }
    }
    return cells;
}

}  // namespace qvision
