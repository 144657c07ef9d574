#pragma once

#include "segbite/image.hpp"
#include "segbite/label_map.hpp"
#include "segbite/page_xml.hpp"
#include "segbite/segmodel.hpp"

#include <cstdint>
#include <map>

namespace segbite {

/// Marks every pixel lying inside or on the boundary of at least one
/// textline polygon. Matches point_in_polygon pixel for pixel.
BinaryMask rasterize_textlines(const std::vector<TextLine>& lines, Size size);

/// Ground-truth pixel labels for one page. A pixel receives segment id k
/// iff it is mask foreground, inside a textline polygon, and covered by
/// regions of exactly one segment (k). Pixels claimed by two different
/// segments are excluded (label 0); page numbers and dropped titles are
/// not in `seg`, so they contribute nothing.
///
/// Throws ArgumentError when mask dimensions differ from the page size.
LabelMap build_label_map(const AnnotatedPage& page, const Segmentation& seg,
                         const std::vector<TextLine>& lines, const BinaryMask& mask);

/// Exact pixel count per nonzero label.
std::map<std::uint32_t, std::uint64_t> foreground_census(const LabelMap& map);

} // namespace segbite
