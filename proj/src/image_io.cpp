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

#include "qvision/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include "qvision/errors.hpp"

namespace qvision {

namespace {

// Reads the next whitespace-delimited header token, skipping '#' comments.
std::string next_token(const std::string &bytes, std::size_t &pos) {
    while (pos < bytes.size()) {
        unsigned char c = static_cast<unsigned char>(bytes[pos]);
        if (c == '#') {
            while (pos < bytes.size() && bytes[pos] != '\n') {
                ++pos;
            }
        } else if (std::isspace(c)) {
            ++pos;
        } else {
            break;
        }
    }
    std::size_t start = pos;
    while (pos < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[pos]))) {
        ++pos;
    }
    return bytes.substr(start, pos - start);
}

int parse_header_int(const std::string &token, const char *what) {
    if (token.empty() || token.size() > 9) {
        throw IoError(std::string("PGM: bad ") + what);
    }
    for (char c : token) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw IoError(std::string("PGM: bad ") + what);
        }
    }
    return std::stoi(token);
}

}  // namespace

GrayImage decode_pgm(const std::string &bytes) {
    std::size_t pos = 0;
    if (next_token(bytes, pos) != "P5") {
        throw IoError("PGM: missing P5 signature");
    }
    int width = parse_header_int(next_token(bytes, pos), "width");
    int height = parse_header_int(next_token(bytes, pos), "height");
    int maxval = parse_header_int(next_token(bytes, pos), "maxval");
    if (width <= 0 || height <= 0) {
        throw IoError("PGM: empty image");
    }
    if (maxval <= 0 || maxval > 255) {
        throw IoError("PGM: unsupported bit depth (maxval " + std::to_string(maxval) + ")");
    }
    // Exactly one whitespace byte separates the header from the raster.
    ++pos;
    std::size_t n = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    if (pos > bytes.size() || bytes.size() - pos < n) {
        throw IoError("PGM: truncated raster");
    }
    GrayImage img(width, height);
    img.maxval = maxval;
    for (std::size_t i = 0; i < n; ++i) {
        auto v = static_cast<std::uint8_t>(bytes[pos + i]);
        if (v > maxval) {
            throw IoError("PGM: sample exceeds maxval");
        }
        img.pixels[i] = v;
    }
    return img;
}

std::string encode_pgm(const GrayImage &image) {
    std::ostringstream os;
    os << "P5\n" << image.width << ' ' << image.height << '\n' << image.maxval << '\n';
    os.write(reinterpret_cast<const char *>(image.pixels.data()), static_cast<std::streamsize>(image.pixels.size()));
    return os.str();
}

namespace {

struct FileCloser {
    void operator()(std::FILE *f) const {
        std::fclose(f);
    }
};

void png_error_handler(png_structp png, png_const_charp message) {
    auto *err = static_cast<std::string *>(png_get_error_ptr(png));
    *err = message;
    png_longjmp(png, 1);
}

void png_warning_handler(png_structp, png_const_charp) {
}

}  // namespace

GrayImage read_png(const std::filesystem::path &path) {
    std::unique_ptr<std::FILE, FileCloser> file(std::fopen(path.c_str(), "rb"));
    if (!file) {
        throw IoError("cannot open " + path.string());
    }
    std::string error;
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &error, png_error_handler, png_warning_handler);
    if (png == nullptr) {
        throw IoError("PNG: out of memory");
    }
    png_infop info = png_create_info_struct(png);
    GrayImage img;
    std::vector<png_bytep> rows;
    // libpng reports errors by longjmp; nothing with a destructor is created below this point.
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("PNG: " + error + " (" + path.string() + ")");
    }
    png_init_io(png, file.get());
    png_read_info(png, info);
    png_uint_32 width = png_get_image_width(png, info);
    png_uint_32 height = png_get_image_height(png, info);
    int bit_depth = png_get_bit_depth(png, info);
    int color_type = png_get_color_type(png, info);
    bool ok = bit_depth == 8 && color_type == PNG_COLOR_TYPE_GRAY && png_get_interlace_type(png, info) ==
                                                                         PNG_INTERLACE_NONE;
    if (ok) {
        img = GrayImage(static_cast<int>(width), static_cast<int>(height));
        rows.resize(height);
        for (png_uint_32 y = 0; y < height; ++y) {
            rows[y] = img.pixels.data() + static_cast<std::size_t>(y) * width;
        }
        png_read_image(png, rows.data());
    }
    png_destroy_read_struct(&png, &info, nullptr);
    if (!ok) {
        throw IoError("PNG: unsupported bit depth or color type (need 8-bit grayscale): " + path.string());
    }
    return img;
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::filesystem::path &path, const std::string &bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw IoError("write failed: " + path.string());
    }
}

GrayImage read_image(const std::filesystem::path &path) {
    std::string bytes = read_file(path);
    static constexpr unsigned char kPngSignature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
    if (bytes.size() >= 8 && std::equal(bytes.begin(), bytes.begin() + 8, std::begin(kPngSignature),
                                        [](char a, unsigned char b) { return static_cast<unsigned char>(a) == b; })) {
        return read_png(path);
    }
    if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '5') {
        return decode_pgm(bytes);
    }
    throw IoError("unsupported image format: " + path.string());
}

}  // namespace qvision
