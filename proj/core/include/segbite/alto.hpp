#pragma once

#include "segbite/geometry.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace segbite {

/// One recognized word with its outline.
struct WordBox {
    Polygon polygon;
    std::string text;
};

/// Reads String elements from an ALTO document. Words carrying a
/// Shape/Polygon get that outline; words with only HPOS/VPOS/WIDTH/HEIGHT
/// fall back to their rectangular extent. Throws ParseError on malformed
/// XML.
std::vector<WordBox> parse_alto(std::string_view bytes);

} // namespace segbite
