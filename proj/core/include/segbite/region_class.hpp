#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace segbite {

enum class RegionClass {
    Title,
    Text,
    PageNumber,
};

/// Lowercases and folds '-', '_' and ' ' so "Page Number", "page_number"
/// and "page-number" all normalize to "page-number".
std::string normalize_category(std::string_view name);

/// nullopt for names outside the {title, text, page-number} set.
std::optional<RegionClass> region_class_from_name(std::string_view name);

std::string_view to_string(RegionClass cls);

} // namespace segbite
