#include "toric/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace toric {

ResultCache::ResultCache(std::string directory) : dir_(std::move(directory)) {
    if (!dir_.empty())
        std::filesystem::create_directories(dir_);
}

ResultCache ResultCache::from_environment(const std::string& flag_dir) {
    if (!flag_dir.empty())
        return ResultCache(flag_dir);
    if (const char* env = std::getenv("TORIC_CACHE_DIR"))
        return ResultCache(env);
    return ResultCache(std::string{});
}

std::string ResultCache::key_for(const std::string& canonical_request) const {
    return hex64(fnv1a64(canonical_request));
}

std::optional<std::string> ResultCache::lookup(const std::string& key) const {
    if (!enabled())
        return std::nullopt;
    std::ifstream in(std::filesystem::path(dir_) / (key + ".out"), std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void ResultCache::store(const std::string& key, const std::string& value) const {
    if (!enabled())
        return;
    auto path = std::filesystem::path(dir_) / (key + ".out");
    auto tmp = std::filesystem::path(dir_) / (key + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary);
        out << value;
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace toric
