#include "segbite/threshold.hpp"

#include "segbite/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace segbite {

BinaryMask adaptive_threshold(const GrayImage& img, int window, double bias, bool invert) {
    if (window < 3 || window % 2 == 0) {
        throw ArgumentError("adaptive_threshold: window must be odd and >= 3, got " +
                            std::to_string(window));
    }
    if (!img.valid()) {
        throw ArgumentError("adaptive_threshold: invalid image");
    }

    const int w = img.size.width;
    const int h = img.size.height;
    const int radius = window / 2;

    // prefix(y+1, x+1) = sum of pixels in [0,y] x [0,x]
    std::vector<std::uint64_t> prefix(std::size_t(w + 1) * (h + 1), 0);
    for (int y = 0; y < h; ++y) {
        const std::uint8_t* row = img.pixels.data() + std::size_t(y) * w;
        std::uint64_t run = 0;
        const std::uint64_t* above = prefix.data() + std::size_t(y) * (w + 1);
        std::uint64_t* cur = prefix.data() + std::size_t(y + 1) * (w + 1);
        for (int x = 0; x < w; ++x) {
            run += row[x];
            cur[x + 1] = above[x + 1] + run;
        }
    }

    BinaryMask mask = make_mask(img.size);
    for (int y = 0; y < h; ++y) {
        const int y0 = std::max(0, y - radius);
        const int y1 = std::min(h - 1, y + radius);
        const std::uint64_t* top = prefix.data() + std::size_t(y0) * (w + 1);
        const std::uint64_t* bottom = prefix.data() + std::size_t(y1 + 1) * (w + 1);
        const std::uint8_t* row = img.pixels.data() + std::size_t(y) * w;
        std::uint8_t* out = mask.bits.data() + std::size_t(y) * w;
        for (int x = 0; x < w; ++x) {
            const int x0 = std::max(0, x - radius);
            const int x1 = std::min(w - 1, x + radius);
            const std::uint64_t sum = bottom[x1 + 1] - bottom[x0] - top[x1 + 1] + top[x0];
            const std::int64_t count = std::int64_t(x1 - x0 + 1) * (y1 - y0 + 1);
            const double mean = double(sum) / double(count);
            const bool fg = invert ? double(row[x]) > mean + bias : double(row[x]) < mean - bias;
            out[x] = fg ? 1 : 0;
        }
    }
    return mask;
}

} // namespace segbite
