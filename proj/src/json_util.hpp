#pragma once

// Path-aware accessors over nlohmann::json used by the file readers.

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mtsp/error.hpp"

namespace mtsp::detail {

using json = nlohmann::ordered_json;

inline std::string child_path(const std::string& parent, std::string_view key) {
    return parent + "/" + std::string(key);
}

inline std::string child_path(const std::string& parent, std::size_t index) {
    return parent + "/" + std::to_string(index);
}

inline const json& require(const json& obj, const std::string& path, std::string_view key) {
    if (!obj.is_object()) throw ParseError(path.empty() ? "/" : path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(child_path(path, key), "missing field");
    return *it;
}

inline double get_finite(const json& v, const std::string& path) {
    if (!v.is_number()) throw ParseError(path, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ParseError(path, "coordinate must be finite");
    return d;
}

inline std::uint64_t get_unsigned(const json& v, const std::string& path) {
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0)
        return static_cast<std::uint64_t>(v.get<std::int64_t>());
    throw ParseError(path, "expected a non-negative integer");
}

inline const json& get_array(const json& v, const std::string& path) {
    if (!v.is_array()) throw ParseError(path, "expected an array");
    return v;
}

/// Parses text, converting syntax errors into ParseError with line/column context.
inline json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("/", "syntax error at line " + std::to_string(line) + ", column " +
                                  std::to_string(col) + ": " + e.what());
    } catch (const json::exception& e) {
        throw ParseError("/", e.what());
    }
}

}  // namespace mtsp::detail
