#include "segbite/alto.hpp"

#include "input_guards.hpp"
#include "xml_common.hpp"

#include <cmath>

namespace segbite {

namespace {

using boost::property_tree::ptree;

std::vector<Point> shape_polygon(const ptree& string_node) {
    for (const auto& [name, child] : string_node) {
        if (detail::local_name(name) != "Shape") {
            continue;
        }
        for (const auto& [pname, pnode] : child) {
            if (detail::local_name(pname) == "Polygon") {
                return detail::parse_point_list(pnode.get<std::string>("<xmlattr>.POINTS", ""));
            }
        }
    }
    return {};
}

void collect_strings(const ptree& node, std::vector<WordBox>& out) {
    for (const auto& [name, child] : node) {
        if (name == "<xmlattr>" || name == "<xmltext>") {
            continue;
        }
        if (detail::local_name(name) != "String") {
            collect_strings(child, out);
            continue;
        }

        WordBox word;
        word.text = child.get<std::string>("<xmlattr>.CONTENT", "");
        word.polygon.points = shape_polygon(child);
        if (!word.polygon.valid()) {
            const auto x = child.get_optional<double>("<xmlattr>.HPOS");
            const auto y = child.get_optional<double>("<xmlattr>.VPOS");
            const auto w = child.get_optional<double>("<xmlattr>.WIDTH");
            const auto h = child.get_optional<double>("<xmlattr>.HEIGHT");
            if (!x || !y || !w || !h || *w <= 0 || *h <= 0) {
                continue;
            }
            const BBox box{int(std::floor(*x + 0.5)), int(std::floor(*y + 0.5)),
                           int(std::floor(*w + 0.5)), int(std::floor(*h + 0.5))};
            if (box.w <= 0 || box.h <= 0) {
                continue;
            }
            word.polygon = Polygon::from_bbox(box);
        }
        out.push_back(std::move(word));
    }
}

} // namespace

std::vector<WordBox> parse_alto(std::string_view bytes) {
    detail::guard_xml_depth(bytes);
    const auto tree = detail::parse_xml_tree(bytes, "alto");
    std::vector<WordBox> out;
    collect_strings(tree, out);
    return out;
}

} // namespace segbite
