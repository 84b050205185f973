#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace shallowperm::cli {

using json = nlohmann::ordered_json;

enum class Format { Json, Csv, Markdown };

std::optional<Format> parse_format(std::string_view text);

/// What every command prints. The payload always carries "columns" and
/// "rows" (an array of flat string-valued objects); csv and md render
/// exactly those rows.
struct OutputDocument {
    std::string schema_version = "1";
    std::string command;
    json parameters = json::object();
    json payload = json::object();
    std::int64_t elapsed_ms = 0;

    friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

json to_json(const OutputDocument& doc);
/// Throws std::invalid_argument on a malformed document.
OutputDocument from_json(const json& j);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

Table table_of(const OutputDocument& doc);

std::string render(const OutputDocument& doc, Format format);
std::string render_csv(const Table& t);
std::string render_markdown(const OutputDocument& doc);

/// Inverse of render_csv for the quoting it produces (RFC 4180 style).
Table parse_csv(std::string_view text);

}  // namespace shallowperm::cli
