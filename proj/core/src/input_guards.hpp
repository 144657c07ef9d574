#pragma once

#include "segbite/errors.hpp"

#include <string_view>

namespace segbite::detail {

// Both backing parsers recurse on nesting, so unbounded depth in untrusted
// input would blow the stack. These pre-scans reject absurd nesting with a
// regular ParseError instead.

inline void guard_json_depth(std::string_view bytes, int limit = 1000) {
    int depth = 0;
    bool in_string = false;
    bool escaped = false;
    for (char c : bytes) {
        if (in_string) {
            if (escaped) {
                escaped = false;
            } else if (c == '\\') {
                escaped = true;
            } else if (c == '"') {
                in_string = false;
            }
            continue;
        }
        switch (c) {
        case '"':
            in_string = true;
            break;
        case '[':
        case '{':
            if (++depth > limit) {
                throw ParseError("json: nesting deeper than " + std::to_string(limit));
            }
            break;
        case ']':
        case '}':
            --depth;
            break;
        default:
            break;
        }
    }
}

inline void guard_xml_depth(std::string_view bytes, int limit = 512) {
    int depth = 0;
    std::size_t i = 0;
    const std::size_t n = bytes.size();
    auto skip_past = [&](std::string_view marker) {
        const auto pos = bytes.find(marker, i);
        i = (pos == std::string_view::npos) ? n : pos + marker.size();
    };
    while (i < n) {
        if (bytes[i] != '<') {
            ++i;
            continue;
        }
        if (i + 1 >= n) {
            break;
        }
        const char next = bytes[i + 1];
        if (next == '/') {
            --depth;
            ++i;
        } else if (next == '?') {
            i += 2;
            skip_past("?>");
        } else if (next == '!') {
            if (bytes.compare(i, 4, "<!--") == 0) {
                i += 4;
                skip_past("-->");
            } else if (bytes.compare(i, 9, "<![CDATA[") == 0) {
                i += 9;
                skip_past("]]>");
            } else {
                ++i;
                skip_past(">");
            }
        } else {
            // Opening tag; self-closing "/>" pops right back.
            const auto close = bytes.find('>', i + 1);
            if (++depth > limit) {
                throw ParseError("xml: nesting deeper than " + std::to_string(limit));
            }
            if (close == std::string_view::npos) {
                break;
            }
            if (close > 0 && bytes[close - 1] == '/') {
                --depth;
            }
            i = close + 1;
        }
    }
}

} // namespace segbite::detail
