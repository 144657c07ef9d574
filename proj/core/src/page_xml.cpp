#include "segbite/page_xml.hpp"

#include "input_guards.hpp"
#include "xml_common.hpp"

namespace segbite {

namespace {

using boost::property_tree::ptree;

void collect_textlines(const ptree& node, PageXmlResult& out) {
    for (const auto& [name, child] : node) {
        if (name == "<xmlattr>" || name == "<xmltext>") {
            continue;
        }
        if (detail::local_name(name) != "TextLine") {
            collect_textlines(child, out);
            continue;
        }

        TextLine line;
        bool have_coords = false;
        for (const auto& [cname, cnode] : child) {
            const auto local = detail::local_name(cname);
            if (local == "Coords") {
                line.polygon.points =
                    detail::parse_point_list(cnode.get<std::string>("<xmlattr>.points", ""));
                have_coords = true;
            } else if (local == "TextEquiv") {
                for (const auto& [ename, enode] : cnode) {
                    if (detail::local_name(ename) == "Unicode") {
                        line.transcription = enode.get_value<std::string>();
                    }
                }
                if (auto conf = cnode.get_optional<double>("<xmlattr>.conf")) {
                    line.confidence = *conf;
                }
            }
        }
        if (!line.confidence) {
            if (auto conf = child.get_optional<double>("<xmlattr>.conf")) {
                line.confidence = *conf;
            }
        }

        if (!have_coords || !line.polygon.valid()) {
            const auto id = child.get<std::string>("<xmlattr>.id", "?");
            out.warnings.push_back("textline '" + id + "': missing or degenerate Coords, skipped");
            continue;
        }
        out.lines.push_back(std::move(line));
    }
}

} // namespace

PageXmlResult parse_pagexml(std::string_view bytes) {
    detail::guard_xml_depth(bytes);
    const auto tree = detail::parse_xml_tree(bytes, "pagexml");
    PageXmlResult out;
    collect_textlines(tree, out);
    return out;
}

} // namespace segbite
