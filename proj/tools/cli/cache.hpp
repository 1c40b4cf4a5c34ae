#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "trunc_hermite/errors.hpp"
#include "trunc_hermite/recurrence.hpp"

namespace trunc_hermite::cli {

/// A cached document failed to parse or to validate.
class CacheCorrupt : public Error {
 public:
  using Error::Error;
};

struct CacheKey {
  std::string z;  // decimal string exactly as given
  int n_max = 0;
  int digits = 0;
  std::string method;

  [[nodiscard]] std::string file_name() const;
};

/// Directory of GammaTable JSON documents keyed by CacheKey.
class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// $XDG_CACHE_HOME/trunc_hermite, else $HOME/.cache/trunc_hermite, else
  /// a directory under the system temporary path.
  static std::filesystem::path default_dir();

  /// nullopt when absent. Throws CacheCorrupt when the entry does not parse,
  /// does not match the key, or fails validation.
  [[nodiscard]] std::optional<GammaTable> load(const CacheKey& key) const;

  /// load() with CacheCorrupt turned into a warning on `warn` and a miss.
  std::optional<GammaTable> load_or_warn(const CacheKey& key, std::ostream& warn) const;

  /// Writes atomically (temporary file then rename).
  void store(const CacheKey& key, const GammaTable& table) const;

  [[nodiscard]] std::filesystem::path path_for(const CacheKey& key) const { return dir_ / key.file_name(); }

 private:
  std::filesystem::path dir_;
};

}  // namespace trunc_hermite::cli
