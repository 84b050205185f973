#include "cli/document.hpp"

#include <sstream>
#include <stdexcept>

namespace shallowperm::cli {

std::optional<Format> parse_format(std::string_view text) {
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    if (text == "md") return Format::Markdown;
    return std::nullopt;
}

json to_json(const OutputDocument& doc) {
    json j;
    j["schema_version"] = doc.schema_version;
    j["command"] = doc.command;
    j["parameters"] = doc.parameters;
    j["payload"] = doc.payload;
    // Decimal string like every other number in the document.
    j["elapsed_ms"] = std::to_string(doc.elapsed_ms);
    return j;
}

OutputDocument from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("document is not a JSON object");
    for (const char* key : {"schema_version", "command", "parameters", "payload", "elapsed_ms"}) {
        if (!j.contains(key)) throw std::invalid_argument(std::string("document lacks '") + key + "'");
    }
    OutputDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    if (doc.schema_version != "1") throw std::invalid_argument("unsupported schema_version " + doc.schema_version);
    doc.command = j.at("command").get<std::string>();
    doc.parameters = j.at("parameters");
    doc.payload = j.at("payload");
    try {
        doc.elapsed_ms = std::stoll(j.at("elapsed_ms").get<std::string>());
    } catch (const std::logic_error&) {
        throw std::invalid_argument("elapsed_ms is not a decimal string");
    }
    return doc;
}

Table table_of(const OutputDocument& doc) {
    Table t;
    for (const auto& c : doc.payload.at("columns")) t.columns.push_back(c.get<std::string>());
    for (const auto& r : doc.payload.at("rows")) {
        std::vector<std::string> row;
        for (const auto& c : t.columns) row.push_back(r.contains(c) ? r.at(c).get<std::string>() : "");
        t.rows.push_back(std::move(row));
    }
    return t;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

std::string md_cell(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '|') out += '\\';
        out += ch == '\n' ? ' ' : ch;
    }
    return out.empty() ? " " : out;
}

std::string md_row(const std::vector<std::string>& cells) {
    std::string out = "|";
    for (const auto& c : cells) out += " " + md_cell(c) + " |";
    return out + "\n";
}

}  // namespace

std::string render_csv(const Table& t) {
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_field(cells[i]);
        out += "\n";
    };
    line(t.columns);
    for (const auto& r : t.rows) line(r);
    return out;
}

std::string render_markdown(const OutputDocument& doc) {
    const Table t = table_of(doc);
    std::string out = "### shallowperm " + doc.command + "\n\n";
    // Scalar payload fields become a short preamble.
    for (const auto& [key, value] : doc.payload.items()) {
        if (key == "columns" || key == "rows" || !value.is_primitive()) continue;
        out += "- " + key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    }
    out += "\n" + md_row(t.columns);
    out += "|";
    for (std::size_t i = 0; i < t.columns.size(); ++i) out += " --- |";
    out += "\n";
    for (const auto& r : t.rows) out += md_row(r);
    return out;
}

std::string render(const OutputDocument& doc, Format format) {
    switch (format) {
        case Format::Json: return to_json(doc).dump(2) + "\n";
        case Format::Csv: return render_csv(table_of(doc));
        case Format::Markdown: return render_markdown(doc);
    }
    return {};
}

Table parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> lines;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false, any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        any = true;
        if (quoted) {
            if (ch == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                field += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            row.push_back(std::move(field));
            field.clear();
        } else if (ch == '\n') {
            row.push_back(std::move(field));
            field.clear();
            lines.push_back(std::move(row));
            row.clear();
            any = false;
        } else if (ch != '\r') {
            field += ch;
        }
    }
    if (any) {
        row.push_back(std::move(field));
        lines.push_back(std::move(row));
    }
    Table t;
    if (lines.empty()) return t;
    t.columns = std::move(lines.front());
    t.rows.assign(std::make_move_iterator(lines.begin() + 1), std::make_move_iterator(lines.end()));
    return t;
}

}  // namespace shallowperm::cli
