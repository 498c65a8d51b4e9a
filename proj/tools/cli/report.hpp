#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vercat::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* artifact_version = "0.1.0";

enum class Format { human, json, csv };

struct Check {
    std::string name;
    bool passed = true;
    std::string details;
    /// "check", "demo" (expected behavior, e.g. non-stabilization) or
    /// "experiment" (informational, never fails)
    std::string kind = "check";
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    bool empty() const noexcept { return header.empty(); }
};

struct Report {
    std::string command;
    Json parameters = Json::object();
    Json results = Json::object();
    Table table;
    std::vector<Check> checks;
    std::vector<std::string> lines; ///< human summary
    std::optional<std::uint64_t> seed;

    bool passed() const;
    Json to_json() const;
    std::string render(Format f) const;
};

} // namespace vercat::cli
