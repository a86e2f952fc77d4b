#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "spin4/error.hpp"
#include "spin4/manifold_model.hpp"
#include "spin4/matrix.hpp"

// Manifest documents:
//   {"label": "K3 # S2xS2",
//    "summands": [{"name": "K3", "count": 1}, {"gram": [[0, 1], [1, 0]]}],
//    "spin": true,
//    "orientation": "given"}
// "label", "spin" and "orientation" are optional. Matrices are row-major
// arrays of JSON integers.

namespace spin4 {

namespace detail {

inline std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline Integer json_integer(const nlohmann::json& j, const std::string& where) {
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                      : Integer(std::to_string(j.get<std::int64_t>()));
    }
    throw Error(ErrorCode::SchemaError, where + ": expected an integer, got " + std::string(j.type_name()));
}

inline void reject_unknown_keys(const nlohmann::json& obj, std::initializer_list<std::string_view> allowed,
                                const std::string& where) {
    for (const auto& item : obj.items()) {
        bool ok = false;
        for (auto a : allowed) ok = ok || item.key() == a;
        if (!ok) throw Error(ErrorCode::SchemaError, where + ": unknown field '" + item.key() + "'");
    }
}

} // namespace detail

inline nlohmann::json parse_json_text(std::string_view text, const std::string& source) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, source + ": " + detail::line_column(text, e.byte) + ": " + e.what());
    }
}

inline std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, path.string() + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline IntMatrix parse_int_matrix(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array()) throw Error(ErrorCode::SchemaError, where + ": expected an array of rows");
    IntMatrix m(j.size(), j.empty() ? 0 : (j[0].is_array() ? j[0].size() : 0));
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string row_where = where + "[" + std::to_string(i) + "]";
        if (!j[i].is_array()) throw Error(ErrorCode::SchemaError, row_where + ": expected an array");
        if (j[i].size() != m.cols()) {
            throw Error(ErrorCode::SchemaError, row_where + ": has " + std::to_string(j[i].size()) +
                                                    " entries, expected " + std::to_string(m.cols()));
        }
        for (std::size_t k = 0; k < j[i].size(); ++k) {
            m(i, k) = detail::json_integer(j[i][k], row_where + "[" + std::to_string(k) + "]");
        }
    }
    if (!m.is_square()) {
        throw Error(ErrorCode::SchemaError, where + ": matrix is " + std::to_string(m.rows()) + "x" +
                                                std::to_string(m.cols()) + ", expected square");
    }
    return m;
}

inline ManifoldManifest manifest_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw Error(ErrorCode::SchemaError, "manifest: expected a JSON object");
    detail::reject_unknown_keys(doc, {"label", "summands", "spin", "orientation"}, "manifest");
    ManifoldManifest man;
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) throw Error(ErrorCode::SchemaError, "label: expected a string");
        man.label = doc["label"].get<std::string>();
    }
    if (doc.contains("spin")) {
        if (!doc["spin"].is_boolean()) throw Error(ErrorCode::SchemaError, "spin: expected true or false");
        man.spin = doc["spin"].get<bool>();
    }
    if (doc.contains("orientation")) {
        const auto& o = doc["orientation"];
        if (o == "given") {
            man.orientation = Orientation::Given;
        } else if (o == "reversed") {
            man.orientation = Orientation::Reversed;
        } else {
            throw Error(ErrorCode::SchemaError, "orientation: expected \"given\" or \"reversed\"");
        }
    }
    if (!doc.contains("summands")) throw Error(ErrorCode::SchemaError, "manifest: missing field 'summands'");
    const auto& list = doc["summands"];
    if (!list.is_array()) throw Error(ErrorCode::SchemaError, "summands: expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string where = "summands[" + std::to_string(i) + "]";
        const auto& s = list[i];
        if (!s.is_object()) throw Error(ErrorCode::SchemaError, where + ": expected an object");
        if (s.contains("gram")) {
            detail::reject_unknown_keys(s, {"gram"}, where);
            man.summands.emplace_back(parse_int_matrix(s["gram"], where + ".gram"));
            continue;
        }
        detail::reject_unknown_keys(s, {"name", "count"}, where);
        if (!s.contains("name") || !s["name"].is_string()) {
            throw Error(ErrorCode::SchemaError, where + ": expected \"name\" or \"gram\"");
        }
        const std::string name = s["name"].get<std::string>();
        const auto form = parse_named_form(name);
        if (!form) {
            throw Error(ErrorCode::SchemaError,
                        where + ".name: unknown form '" + name + "' (expected K3, S2xS2, E8, MinusE8 or H)");
        }
        NamedSummand ns{*form, 1};
        if (s.contains("count")) {
            const auto& c = s["count"];
            if (!c.is_number_integer() || c.get<std::int64_t>() < 0) {
                throw Error(ErrorCode::SchemaError, where + ".count: expected a non-negative integer");
            }
            ns.count = c.get<std::size_t>();
        }
        man.summands.emplace_back(ns);
    }
    if (man.summands.empty()) throw Error(ErrorCode::EmptyManifest, "summands: empty list");
    return man;
}

inline ManifoldManifest parse_manifest(std::string_view text, const std::string& source = "manifest") {
    return manifest_from_json(parse_json_text(text, source));
}

inline ManifoldManifest load_manifest(const std::filesystem::path& path) {
    return parse_manifest(read_text_file(path), path.string());
}

/// Accepts either a bare row array or {"matrix": [[...]]}.
inline IntMatrix parse_matrix_document(std::string_view text, const std::string& source = "matrix") {
    const nlohmann::json doc = parse_json_text(text, source);
    if (doc.is_object()) {
        detail::reject_unknown_keys(doc, {"matrix"}, source);
        if (!doc.contains("matrix")) throw Error(ErrorCode::SchemaError, source + ": missing field 'matrix'");
        return parse_int_matrix(doc["matrix"], "matrix");
    }
    return parse_int_matrix(doc, "matrix");
}

} // namespace spin4
