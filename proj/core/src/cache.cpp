#include "packing/cache.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace packing {

DiskCache::DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::string DiskCache::hash_hex(const std::string& key) {
    // FNV-1a 64
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string DiskCache::homology_key(const Tuple& N, const Tuple& d, int k) {
    std::ostringstream os;
    os << "homology|" << tuple_str(N) << '|' << tuple_str(d) << '|' << k << '|' << kCacheVersion;
    return os.str();
}

std::optional<std::string> DiskCache::load(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(dir_ / (hash_hex(key) + ".json"));
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void DiskCache::store(const std::string& key, const std::string& value) const {
    if (!enabled()) return;
    auto path = dir_ / (hash_hex(key) + ".json");
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << value;
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace packing
