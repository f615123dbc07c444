#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "edgereg/context.hpp"

namespace edgereg::cli {

inline constexpr const char* kCacheDirEnv = "EDGEREG_CACHE_DIR";

/// One file per key under `dir`, named by a 64-bit FNV-1a hash of the key.
/// The file holds the full key on its first line so hash collisions read as
/// misses. Writes go to a temporary file renamed into place, so concurrent
/// writers of the same key leave one complete copy.
class FileStore final : public verify::TableStore {
 public:
  explicit FileStore(std::filesystem::path dir);

  std::optional<std::string> get(const std::string& key) override;
  void put(const std::string& key, const std::string& value) override;

  const std::filesystem::path& directory() const { return dir_; }

 private:
  std::filesystem::path path_for(const std::string& key) const;

  std::filesystem::path dir_;
};

/// --cache-dir if given, else $EDGEREG_CACHE_DIR, else ~/.cache/edgereg.
std::filesystem::path default_cache_dir(const std::optional<std::string>& flag);

}  // namespace edgereg::cli
