#include "gnq/report.hpp"

#include <algorithm>
#include <sstream>

#include "gnq/errors.hpp"

namespace gnq {

std::string render_text(const Report& report) {
    std::ostringstream out;
    out << "== " << report.subject << " ==\n";
    for (const auto& s : report.sections) {
        out << "\n" << s.title << "\n";
        if (s.kind == ReportSection::Kind::Text) {
            out << "  " << s.text << "\n";
            continue;
        }
        std::vector<size_t> width(s.columns.size());
        for (size_t c = 0; c < s.columns.size(); ++c) width[c] = s.columns[c].size();
        for (const auto& row : s.rows)
            for (size_t c = 0; c < row.size() && c < width.size(); ++c)
                width[c] = std::max(width[c], row[c].size());
        auto emit = [&](const std::vector<std::string>& row) {
            out << "  ";
            for (size_t c = 0; c < width.size(); ++c) {
                std::string cell = c < row.size() ? row[c] : "";
                out << cell << std::string(width[c] - cell.size() + 2, ' ');
            }
            out << "\n";
        };
        emit(s.columns);
        for (const auto& row : s.rows) emit(row);
    }
    return out.str();
}

nlohmann::ordered_json render_json(const Report& report) {
    nlohmann::ordered_json j;
    j["subject"] = report.subject;
    auto sections = nlohmann::ordered_json::array();
    for (const auto& s : report.sections) {
        nlohmann::ordered_json js;
        js["title"] = s.title;
        if (s.kind == ReportSection::Kind::Text) {
            js["kind"] = "text";
            js["text"] = s.text;
        } else {
            js["kind"] = "table";
            js["columns"] = s.columns;
            js["rows"] = s.rows;
        }
        sections.push_back(std::move(js));
    }
    j["sections"] = std::move(sections);
    return j;
}

Report report_from_json(const nlohmann::ordered_json& j) {
    Report r;
    if (!j.contains("subject") || !j.contains("sections"))
        throw ParseError("report is missing 'subject' or 'sections'");
    r.subject = j["subject"].get<std::string>();
    for (const auto& js : j["sections"]) {
        ReportSection s;
        s.title = js.at("title").get<std::string>();
        std::string kind = js.at("kind").get<std::string>();
        if (kind == "text") {
            s.kind = ReportSection::Kind::Text;
            s.text = js.at("text").get<std::string>();
        } else if (kind == "table") {
            s.kind = ReportSection::Kind::Table;
            s.columns = js.at("columns").get<std::vector<std::string>>();
            s.rows = js.at("rows").get<std::vector<std::vector<std::string>>>();
        } else {
            throw ParseError("unknown section kind '" + kind + "'");
        }
        r.sections.push_back(std::move(s));
    }
    return r;
}

}  // namespace gnq
