#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace gnq {

// Renderable result of a CLI subcommand: an ordered list of text blocks and
// tables under one subject line.  The JSON form round-trips losslessly.
struct ReportSection {
    enum class Kind { Text, Table };
    std::string title;
    Kind kind = Kind::Text;
    std::string text;                            // Kind::Text
    std::vector<std::string> columns;            // Kind::Table
    std::vector<std::vector<std::string>> rows;  // Kind::Table
};

struct Report {
    std::string subject;
    std::vector<ReportSection> sections;

    void add_text(std::string title, std::string text) {
        sections.push_back({std::move(title), ReportSection::Kind::Text, std::move(text), {}, {}});
    }
    void add_table(std::string title, std::vector<std::string> columns,
                   std::vector<std::vector<std::string>> rows) {
        sections.push_back({std::move(title), ReportSection::Kind::Table, "", std::move(columns),
                            std::move(rows)});
    }
};

std::string render_text(const Report& report);
nlohmann::ordered_json render_json(const Report& report);
Report report_from_json(const nlohmann::ordered_json& j);

}  // namespace gnq
