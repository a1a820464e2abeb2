#pragma once

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "characters.hpp"
#include "partitions.hpp"
#include "types.hpp"

namespace sncore {

class CacheError : public std::runtime_error {
public:
    enum class Kind { NotFound, Corrupt, UnsupportedVersion };

    CacheError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

inline constexpr int kColumnCacheVersion = 1;
inline constexpr std::string_view kColumnCacheMagic = "sncore-column";

/// FNV-1a, 64 bit.
inline std::uint64_t checksum64(std::string_view bytes) noexcept
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

/// One persisted column. Serialized as a single tab-separated line:
///
///     sncore-column <version> <n> <mu> <modulus> <v1,v2,...> <checksum>
///
/// modulus 0 marks an exact column; values are decimal strings in canonical
/// alpha order; checksum is 16 lowercase hex digits of checksum64 over the
/// line up to (not including) the tab before it.
struct ColumnCacheEntry {
    int version = kColumnCacheVersion;
    int n = 0;
    Partition mu;
    int modulus = 0;
    std::vector<std::string> values;

    static ColumnCacheEntry from_column(const CharColumn& column)
    {
        ColumnCacheEntry e;
        e.n = column.n;
        e.mu = column.mu;
        e.modulus = column.modulus.value_or(0);
        e.values.reserve(column.values.size());
        for (const auto& v : column.values)
            e.values.push_back(v.str());
        return e;
    }

    CharColumn to_column() const
    {
        CharColumn column{n, mu, modulus ? std::optional<int>(modulus) : std::nullopt, {}};
        column.values.reserve(values.size());
        for (const auto& v : values)
            column.values.emplace_back(v);
        return column;
    }

    std::string payload() const
    {
        std::string out(kColumnCacheMagic);
        out += '\t' + std::to_string(version) + '\t' + std::to_string(n) + '\t' + mu.str() + '\t' +
               std::to_string(modulus) + '\t';
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i)
                out += ',';
            out += values[i];
        }
        return out;
    }

    std::string serialize() const
    {
        std::string body = payload();
        char hex[17];
        std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(checksum64(body)));
        return body + '\t' + hex + '\n';
    }

    static ColumnCacheEntry parse(std::string_view line)
    {
        auto corrupt = [](const std::string& why) { return CacheError(CacheError::Kind::Corrupt, why); };
        while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
            line.remove_suffix(1);
        std::vector<std::string_view> fields;
        for (std::size_t start = 0;;) {
            auto tab = line.find('\t', start);
            fields.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
            if (tab == std::string_view::npos)
                break;
            start = tab + 1;
        }
        if (fields.empty() || fields[0] != kColumnCacheMagic)
            throw corrupt("not a column cache record");
        if (fields.size() < 2)
            throw corrupt("truncated column cache record");
        int version = 0;
        try {
            version = std::stoi(std::string(fields[1]));
        } catch (const std::exception&) {
            throw corrupt("unreadable cache format version");
        }
        if (version != kColumnCacheVersion)
            throw CacheError(CacheError::Kind::UnsupportedVersion,
                             "column cache format version " + std::to_string(version) + " is not supported");
        if (fields.size() != 7)
            throw corrupt("column cache record has " + std::to_string(fields.size()) + " fields, expected 7");

        const auto body = line.substr(0, line.size() - fields[6].size() - 1);
        char hex[17];
        std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(checksum64(body)));
        if (fields[6] != hex)
            throw corrupt("column cache checksum mismatch");

        ColumnCacheEntry e;
        try {
            e.version = version;
            e.n = std::stoi(std::string(fields[2]));
            e.mu = Partition::parse(fields[3]);
            e.modulus = std::stoi(std::string(fields[4]));
            std::string_view vals = fields[5];
            if (!vals.empty()) {
                for (std::size_t start = 0;;) {
                    auto comma = vals.find(',', start);
                    auto v = vals.substr(start, comma == std::string_view::npos ? comma : comma - start);
                    auto digits = v.starts_with('-') ? v.substr(1) : v;
                    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
                        throw corrupt("non-numeric value in column cache record");
                    e.values.emplace_back(v);
                    if (comma == std::string_view::npos)
                        break;
                    start = comma + 1;
                }
            }
        } catch (const std::exception& ex) {
            throw corrupt(std::string("malformed column cache record: ") + ex.what());
        }
        return e;
    }
};

/// Directory of column cache files, one file per (n, mu, modulus). Reads may
/// run concurrently; writes go through a temporary file and an atomic rename,
/// serialized by a mutex.
class ColumnStore {
public:
    explicit ColumnStore(std::filesystem::path dir) : dir_(std::move(dir))
    {
        std::filesystem::create_directories(dir_);
    }

    const std::filesystem::path& directory() const noexcept { return dir_; }

    std::filesystem::path path_for(int n, const Partition& mu, int modulus) const
    {
        std::string label = mu.str();
        for (char& ch : label)
            if (ch == ',')
                ch = '_';
        return dir_ / ("n" + std::to_string(n) + "_m" + std::to_string(modulus) + "_" + label + ".col");
    }

    bool contains(int n, const Partition& mu, int modulus) const
    {
        return std::filesystem::exists(path_for(n, mu, modulus));
    }

    void save(const ColumnCacheEntry& entry)
    {
        const auto target = path_for(entry.n, entry.mu, entry.modulus);
        std::lock_guard lock(write_mutex_);
        auto tmp = target;
        tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out)
                throw std::runtime_error("cannot write column cache file " + tmp.string());
            out << entry.serialize();
        }
        std::filesystem::rename(tmp, target);
    }

    /// Throws CacheError: NotFound, Corrupt, or UnsupportedVersion.
    ColumnCacheEntry load(int n, const Partition& mu, int modulus) const
    {
        const auto path = path_for(n, mu, modulus);
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw CacheError(CacheError::Kind::NotFound, "no cached column at " + path.string());
        std::ostringstream buffer;
        buffer << in.rdbuf();
        auto entry = ColumnCacheEntry::parse(buffer.str());
        if (entry.n != n || entry.mu != mu || entry.modulus != modulus)
            throw CacheError(CacheError::Kind::Corrupt, "cached column at " + path.string() + " has a different key");
        return entry;
    }

private:
    std::filesystem::path dir_;
    std::mutex write_mutex_;
};

inline void save_column(ColumnStore& store, const CharColumn& column)
{
    store.save(ColumnCacheEntry::from_column(column));
}

inline CharColumn load_column(const ColumnStore& store, int n, const Partition& mu, std::optional<int> modulus)
{
    return store.load(n, mu, modulus.value_or(0)).to_column();
}

/// Computes columns on demand, consulting and filling an optional store.
/// Counts store hits and freshly computed columns.
class ColumnSource {
public:
    ColumnSource() = default;
    explicit ColumnSource(std::optional<std::filesystem::path> cache_dir)
    {
        if (cache_dir)
            store_.emplace(*cache_dir);
    }

    CharColumn get(int n, const Partition& mu, std::optional<int> modulus)
    {
        if (store_) {
            try {
                auto column = load_column(*store_, n, mu, modulus);
                if (column.values.size() != static_cast<std::size_t>(partition_count(n)))
                    throw CacheError(CacheError::Kind::Corrupt, "cached column for " + mu.str() +
                                                                    " has the wrong number of values");
                ++hits_;
                return column;
            } catch (const CacheError& err) {
                if (err.kind() != CacheError::Kind::NotFound)
                    throw;
            }
        }
        ++computed_;
        auto column = compute_column(n, mu, modulus);
        if (store_)
            save_column(*store_, column);
        return column;
    }

    std::uint64_t hits() const noexcept { return hits_; }
    std::uint64_t computed() const noexcept { return computed_; }

private:
    std::optional<ColumnStore> store_;
    std::atomic<std::uint64_t> hits_{0};
    std::atomic<std::uint64_t> computed_{0};
};

} // namespace sncore
