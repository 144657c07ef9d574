#pragma once

#include "segbite/errors.hpp"
#include "segbite/geometry.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <cmath>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace segbite::detail {

inline boost::property_tree::ptree parse_xml_tree(std::string_view bytes, const char* what) {
    boost::property_tree::ptree tree;
    std::istringstream stream{std::string(bytes)};
    try {
        boost::property_tree::read_xml(stream, tree);
    } catch (const boost::property_tree::xml_parser_error& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
    if (tree.empty()) {
        throw ParseError(std::string(what) + ": document has no root element");
    }
    return tree;
}

/// Element name without its namespace prefix ("pc:TextLine" -> "TextLine").
inline std::string_view local_name(std::string_view qualified) {
    const auto colon = qualified.rfind(':');
    return colon == std::string_view::npos ? qualified : qualified.substr(colon + 1);
}

/// Extracts every number from a points attribute and pairs them up in
/// order, which covers both "x1,y1 x2,y2" and "x1 y1 x2 y2" writings.
/// Fractional coordinates are rounded half-up; odd trailing numbers are
/// dropped.
inline std::vector<Point> parse_point_list(std::string_view text) {
    std::vector<double> numbers;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if ((c >= '0' && c <= '9') || c == '-' || c == '+' || c == '.') {
            std::size_t consumed = 0;
            const std::string token(text.substr(i));
            try {
                numbers.push_back(std::stod(token, &consumed));
            } catch (const std::exception&) {
                consumed = 1;
            }
            i += consumed > 0 ? consumed : 1;
        } else {
            ++i;
        }
    }
    std::vector<Point> points;
    points.reserve(numbers.size() / 2);
    for (std::size_t k = 0; k + 1 < numbers.size(); k += 2) {
        points.push_back(Point{int(std::floor(numbers[k] + 0.5)),
                               int(std::floor(numbers[k + 1] + 0.5))});
    }
    return points;
}

} // namespace segbite::detail
