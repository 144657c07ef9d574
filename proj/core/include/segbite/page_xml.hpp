#pragma once

#include "segbite/geometry.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace segbite {

/// One OCR textline: enclosing polygon, transcription and recognition
/// confidence when the producer reported one.
struct TextLine {
    Polygon polygon;
    std::string transcription;
    std::optional<double> confidence;
};

struct PageXmlResult {
    std::vector<TextLine> lines;
    std::vector<std::string> warnings;
};

/// Reads TextLine elements from a PAGE-XML document: polygon from
/// Coords@points ("x1,y1 x2,y2 ..."), transcription from TextEquiv/Unicode,
/// confidence from TextEquiv@conf when present. Region grouping in the file
/// is ignored. Lines with fewer than 3 polygon points are skipped and
/// reported in `warnings`. Throws ParseError on malformed XML.
PageXmlResult parse_pagexml(std::string_view bytes);

} // namespace segbite
