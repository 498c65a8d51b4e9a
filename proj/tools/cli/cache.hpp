#pragma once

// On-disk result cache with one JSON file per canonical key. Each entry
// stores a CRC-32 of its serialized value; entries that fail to parse or
// whose checksum does not match are ignored and overwritten.

#include "report.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace vercat::cli {

class ResultCache {
public:
    ResultCache() = default;
    explicit ResultCache(std::filesystem::path dir);

    bool enabled() const noexcept { return dir_.has_value(); }
    std::optional<Json> load(const std::string& key);
    void store(const std::string& key, const Json& value);

    template <class Fn>
    Json get_or_compute(const std::string& key, Fn&& compute)
    {
        if (auto hit = load(key))
            return *hit;
        Json value = compute();
        store(key, value);
        return value;
    }

    std::size_t hits() const noexcept { return hits_; }
    std::size_t rejected() const noexcept { return rejected_; }

    std::filesystem::path path_for(const std::string& key) const;
    static std::uint32_t checksum(const std::string& payload);

private:
    std::optional<std::filesystem::path> dir_;
    std::size_t hits_ = 0;
    std::size_t rejected_ = 0;
};

} // namespace vercat::cli
