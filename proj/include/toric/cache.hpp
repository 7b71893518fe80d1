#pragma once

#include "toric/common.hpp"

#include <optional>
#include <string>

namespace toric {

/// Content-addressed file cache: key = hash of (canonical input, order,
/// operation, tool version), value = the machine-readable output bytes.
/// Disabled when the directory is empty. TORIC_CACHE_DIR overrides.
class ResultCache {
  public:
    explicit ResultCache(std::string directory);
    static ResultCache from_environment(const std::string& flag_dir);

    bool enabled() const { return !dir_.empty(); }
    std::string key_for(const std::string& canonical_request) const;
    std::optional<std::string> lookup(const std::string& key) const;
    void store(const std::string& key, const std::string& value) const;

  private:
    std::string dir_;
};

}  // namespace toric
