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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace qvision {

/// 8-bit grayscale image, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    /// Largest representable sample value (PGM maxval); 255 for PNG.
    int maxval = 255;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {
    }

    std::uint8_t at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t &at(int x, int y) {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    /// Sample scaled to [0, 1].
    double intensity(int x, int y) const {
        return static_cast<double>(at(x, y)) / maxval;
    }
};

/// Binary PGM (P5) with maxval <= 255. Throws IoError.
GrayImage decode_pgm(const std::string &bytes);
std::string encode_pgm(const GrayImage &image);

/// 8-bit grayscale PNG. Throws IoError for other bit depths or color types.
GrayImage read_png(const std::filesystem::path &path);

/// Dispatches on the file signature (P5 or PNG). Throws IoError.
GrayImage read_image(const std::filesystem::path &path);

void write_file(const std::filesystem::path &path, const std::string &bytes);
std::string read_file(const std::filesystem::path &path);

}  // namespace qvision
