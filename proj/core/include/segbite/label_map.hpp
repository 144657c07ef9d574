#pragma once

#include "segbite/geometry.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace segbite {

/// Per-pixel segment labels at image resolution. 0 is background, k >= 1
/// a segment id. Serialized as single-channel 16-bit grayscale PNG, so a
/// map holds at most 65,535 distinct segment ids.
struct LabelMap {
    Size size;
    std::vector<std::uint32_t> labels; // row-major

    std::uint32_t at(int x, int y) const {
        return labels[std::size_t(y) * size.width + x];
    }
    std::uint32_t& at(int x, int y) {
        return labels[std::size_t(y) * size.width + x];
    }

    bool valid() const {
        return size.valid() && labels.size() == std::size_t(size.area());
    }

    friend bool operator==(const LabelMap&, const LabelMap&) = default;
};

constexpr std::uint32_t kMaxLabel = 0xFFFF;

/// Decodes a 16-bit grayscale PNG. Throws FormatError when the bytes are
/// not a decodable single-channel 16-bit image.
LabelMap read_label_map(const std::vector<std::uint8_t>& bytes);

/// Encodes to 16-bit grayscale PNG; read_label_map(write_label_map(m)) == m.
/// Throws FormatError when a label exceeds the 16-bit label space or the
/// map is inconsistent.
std::vector<std::uint8_t> write_label_map(const LabelMap& map);

LabelMap load_label_map(const std::string& path);
void save_label_map(const LabelMap& map, const std::string& path);

/// Debug visualization: color PNG with one fixed hue per segment id,
/// background black. Purely for eyeballing masks; not part of the data
/// contract.
void save_label_overlay(const LabelMap& map, const std::string& path);

} // namespace segbite
