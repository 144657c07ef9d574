#pragma once

#include "segbite/image.hpp"

namespace segbite {

/// Adaptive binarization: a pixel is foreground iff its value is below the
/// mean of the window x window neighborhood around it minus `bias`
/// (dark ink on light paper; `invert` flips the comparison for negatives).
/// The window is clamped at image borders, so margins are averaged over
/// the in-image part only. Runs on an integral image: cost is one pass
/// over the pixels regardless of window size.
///
/// Throws ArgumentError when window is even or < 3.
BinaryMask adaptive_threshold(const GrayImage& img, int window = 301, double bias = 10.0,
                              bool invert = false);

} // namespace segbite
