#pragma once

#include "segbite/geometry.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace segbite {

/// 8-bit luminance image, row-major.
struct GrayImage {
    Size size;
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(int x, int y) const {
        return pixels[std::size_t(y) * size.width + x];
    }

    bool valid() const {
        return size.valid() && pixels.size() == std::size_t(size.area());
    }
};

/// Per-pixel foreground flags, same dimensions as the source image.
struct BinaryMask {
    Size size;
    std::vector<std::uint8_t> bits; // 0 = background, 1 = foreground

    std::uint8_t at(int x, int y) const {
        return bits[std::size_t(y) * size.width + x];
    }
    void set(int x, int y, bool value) {
        bits[std::size_t(y) * size.width + x] = value ? 1 : 0;
    }

    std::uint64_t popcount() const;

    bool valid() const {
        return size.valid() && bits.size() == std::size_t(size.area());
    }
};

BinaryMask make_mask(Size size, bool value = false);

/// Decodes a PNG or JPEG page image to luminance. Color inputs are
/// converted with the Rec. 601 weights. Throws FormatError when the bytes
/// cannot be decoded, IoError when the file cannot be read.
GrayImage decode_gray_image(const std::vector<std::uint8_t>& bytes);
GrayImage load_gray_image(const std::string& path);

std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes);

} // namespace segbite
