#include "segbite/region_class.hpp"

#include <cctype>

namespace segbite {

std::string normalize_category(std::string_view name) {
    std::string out;
    out.reserve(name.size());
    for (char c : name) {
        if (c == '_' || c == ' ') {
            out.push_back('-');
        } else {
            out.push_back(char(std::tolower(static_cast<unsigned char>(c))));
        }
    }
    return out;
}

std::optional<RegionClass> region_class_from_name(std::string_view name) {
    const std::string n = normalize_category(name);
    if (n == "title") {
        return RegionClass::Title;
    }
    if (n == "text") {
        return RegionClass::Text;
    }
    if (n == "page-number") {
        return RegionClass::PageNumber;
    }
    return std::nullopt;
}

std::string_view to_string(RegionClass cls) {
    switch (cls) {
    case RegionClass::Title:
        return "title";
    case RegionClass::Text:
        return "text";
    case RegionClass::PageNumber:
        return "page-number";
    }
    return "?";
}

} // namespace segbite
