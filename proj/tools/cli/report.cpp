#include "report.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace vercat::cli {

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_row(const std::vector<std::string>& row)
{
    std::string out;
    for (std::size_t i = 0; i < row.size(); ++i)
        out += (i ? "," : "") + csv_field(row[i]);
    return out + "\n";
}

std::string aligned(const Table& t)
{
    std::vector<std::size_t> w(t.header.size(), 0);
    auto widen = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size() && i < w.size(); ++i)
            w[i] = std::max(w[i], r[i].size());
    };
    widen(t.header);
    for (const auto& r : t.rows)
        widen(r);
    auto line = [&](const std::vector<std::string>& r) {
        std::string out;
        for (std::size_t i = 0; i < r.size(); ++i)
            out += fmt::format("{}{:>{}}", i ? "  " : "", r[i], w[i]);
        return out + "\n";
    };
    std::string out = line(t.header);
    for (const auto& r : t.rows)
        out += line(r);
    return out;
}

} // namespace

bool Report::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Json Report::to_json() const
{
    Json j;
    j["command"] = command;
    j["parameters"] = parameters;
    j["results"] = results;
    if (!table.empty()) {
        j["table"]["header"] = table.header;
        j["table"]["rows"] = table.rows;
    }
    j["checks"] = Json::array();
    for (const auto& c : checks)
        j["checks"].push_back({{"name", c.name}, {"kind", c.kind}, {"passed", c.passed}, {"details", c.details}});
    j["passed"] = passed();
    j["versions"]["artifact"] = artifact_version;
    j["versions"]["seed"] = seed ? Json(*seed) : Json(nullptr);
    return j;
}

std::string Report::render(Format f) const
{
    if (f == Format::json)
        return to_json().dump(2) + "\n";
    if (f == Format::csv) {
        if (!table.empty()) {
            std::string out = csv_row(table.header);
            for (const auto& r : table.rows)
                out += csv_row(r);
            return out;
        }
        std::string out = csv_row({"name", "kind", "passed", "details"});
        for (const auto& c : checks)
            out += csv_row({c.name, c.kind, c.passed ? "true" : "false", c.details});
        return out;
    }
    std::string out;
    for (const auto& l : lines)
        out += l + "\n";
    if (!table.empty())
        out += aligned(table);
    std::size_t failed = 0;
    for (const auto& c : checks) {
        const char* tag = !c.passed ? "FAIL" : c.kind == "check" ? "PASS" : c.kind == "demo" ? "DEMO" : "INFO";
        out += fmt::format("[{}] {}{}{}\n", tag, c.name, c.details.empty() ? "" : ": ", c.details);
        failed += !c.passed;
    }
    if (!checks.empty())
        out += failed ? fmt::format("FAILED: {} of {} checks\n", failed, checks.size())
                      : fmt::format("all {} checks passed\n", checks.size());
    return out;
}

} // namespace vercat::cli
