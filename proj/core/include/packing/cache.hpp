#pragma once

#include "packing/partitions.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace packing {

inline constexpr const char* kCacheVersion = "packing-core-1";

/// One JSON file per key under a cache directory; keys are hashed to
/// filenames. An empty directory path disables the cache.
class DiskCache {
public:
    DiskCache() = default;
    explicit DiskCache(std::filesystem::path dir);

    bool enabled() const { return !dir_.empty(); }
    std::optional<std::string> load(const std::string& key) const;
    void store(const std::string& key, const std::string& value) const;

    static std::string homology_key(const Tuple& N, const Tuple& d, int k);
    static std::string hash_hex(const std::string& key);

private:
    std::filesystem::path dir_;
};

}  // namespace packing
