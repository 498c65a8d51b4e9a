#include "cache.hpp"

#include <boost/crc.hpp>
#include <fmt/chrono.h>
#include <fmt/format.h>

#include <chrono>
#include <fstream>
#include <sstream>

namespace vercat::cli {

namespace {

constexpr int cache_format = 1;

} // namespace

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir))
{
    std::filesystem::create_directories(*dir_);
}

std::uint32_t ResultCache::checksum(const std::string& payload)
{
    boost::crc_32_type crc;
    crc.process_bytes(payload.data(), payload.size());
    return crc.checksum();
}

std::filesystem::path ResultCache::path_for(const std::string& key) const
{
    std::string name;
    for (char c : key)
        name += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.') ? c : '_';
    // the suffix separates keys that sanitize to the same name
    return *dir_ / fmt::format("{}-{:08x}.json", name, checksum(key));
}

std::optional<Json> ResultCache::load(const std::string& key)
{
    if (!dir_)
        return std::nullopt;
    std::ifstream in(path_for(key));
    if (!in)
        return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    const auto entry = Json::parse(buf.str(), nullptr, false);
    if (entry.is_discarded() || !entry.is_object() || entry.value("format", 0) != cache_format ||
        entry.value("key", "") != key || !entry.contains("value") || !entry.contains("checksum") ||
        !entry["checksum"].is_number_unsigned() || entry["checksum"].get<std::uint32_t>() != checksum(entry["value"].dump())) {
        ++rejected_;
        return std::nullopt;
    }
    ++hits_;
    return entry["value"];
}

void ResultCache::store(const std::string& key, const Json& value)
{
    if (!dir_)
        return;
    Json entry;
    entry["format"] = cache_format;
    entry["key"] = key;
    entry["created"] = fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(std::time(nullptr)));
    entry["checksum"] = checksum(value.dump());
    entry["value"] = value;
    const auto target = path_for(key);
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << entry.dump() << "\n";
        if (!out)
            return;
    }
    std::filesystem::rename(tmp, target);
}

} // namespace vercat::cli
