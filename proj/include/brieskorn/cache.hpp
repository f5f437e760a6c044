#pragma once

// Checksummed result cache for CLI runs.  One file per key under the cache
// directory; a stale or corrupted checksum is treated as a miss and the
// entry is recomputed, never silently reused.  Writes go through a lock
// file; reads are lock-free.

#include <sys/file.h>

#include <cstdint>
#include <fcntl.h>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unistd.h>

namespace brieskorn {

// Bump when a formula-affecting change invalidates cached payloads.
inline constexpr std::string_view kCacheVersion = "1";

inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

struct CacheEntry {
    std::string payload;
    int status = 0;
};

class ResultCache {
  public:
    explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    std::optional<CacheEntry> fetch(const std::string& key) const {
        std::ifstream in(path_for(key), std::ios::binary);
        if (!in) return std::nullopt;
        std::string magic, stored_key, checksum, sep;
        int status = 0;
        if (!std::getline(in, magic) || magic != std::string("brieskorn-cache v") + std::string(kCacheVersion))
            return std::nullopt;
        if (!std::getline(in, stored_key) || stored_key != "key " + key) return std::nullopt;
        std::string status_line;
        if (!std::getline(in, status_line) || status_line.rfind("status ", 0) != 0) return std::nullopt;
        status = std::atoi(status_line.c_str() + 7);
        if (!std::getline(in, checksum) || checksum.rfind("checksum ", 0) != 0) return std::nullopt;
        std::ostringstream rest;
        rest << in.rdbuf();
        std::string payload = rest.str();
        if (checksum.substr(9) != hex64(fnv1a64(payload))) return std::nullopt;  // corrupt: recompute
        return CacheEntry{std::move(payload), status};
    }

    void store(const std::string& key, const CacheEntry& entry) const {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        int lock_fd = ::open((dir_ / "lock").c_str(), O_CREAT | O_RDWR, 0644);
        if (lock_fd >= 0) ::flock(lock_fd, LOCK_EX);
        auto target = path_for(key);
        auto tmp = target;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out << "brieskorn-cache v" << kCacheVersion << '\n'
                << "key " << key << '\n'
                << "status " << entry.status << '\n'
                << "checksum " << hex64(fnv1a64(entry.payload)) << '\n'
                << entry.payload;
        }
        std::filesystem::rename(tmp, target, ec);
        if (lock_fd >= 0) {
            ::flock(lock_fd, LOCK_UN);
            ::close(lock_fd);
        }
    }

    std::filesystem::path path_for(const std::string& key) const {
        return dir_ / (hex64(fnv1a64(key)) + ".cache");
    }

  private:
    std::filesystem::path dir_;
};

}  // namespace brieskorn
