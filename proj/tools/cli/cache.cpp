#include "cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "trunc_hermite/errors.hpp"
#include "trunc_hermite/io.hpp"

namespace trunc_hermite::cli {

namespace fs = std::filesystem;

std::string CacheKey::file_name() const {
  std::string safe_z;
  for (char c : z) {
    const bool keep = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '.' ||
                      c == '-' || c == '+';
    safe_z += keep ? c : '_';
  }
  return "gamma_z" + safe_z + "_n" + std::to_string(n_max) + "_d" + std::to_string(digits) + "_" + method + ".json";
}

fs::path TableCache::default_dir() {
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
    return fs::path(xdg) / "trunc_hermite";
  }
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return fs::path(home) / ".cache" / "trunc_hermite";
  }
  return fs::temp_directory_path() / "trunc_hermite";
}

std::optional<GammaTable> TableCache::load(const CacheKey& key) const {
  const fs::path path = path_for(key);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  GammaTable table;
  try {
    table = gamma_table_from_json(buffer.str());
  } catch (const Error& e) {
    throw CacheCorrupt("cache entry " + path.string() + " does not parse: " + e.what());
  }
  if (table.precision.working_digits != key.digits || std::string(to_string(table.method)) != key.method ||
      table.n_max() < key.n_max) {
    throw CacheCorrupt("cache entry " + path.string() + " does not match its key");
  }
  const Real expected_z = Real::parse(key.z, table.precision.digits());
  if (table.z != expected_z) throw CacheCorrupt("cache entry " + path.string() + " was built for another z");
  try {
    table.validate();
  } catch (const InvariantViolation& e) {
    throw CacheCorrupt("cache entry " + path.string() + " fails validation: " + e.what());
  }
  return table;
}

std::optional<GammaTable> TableCache::load_or_warn(const CacheKey& key, std::ostream& warn) const {
  try {
    return load(key);
  } catch (const CacheCorrupt& e) {
    warn << "warning: " << e.what() << "; recomputing\n";
    return std::nullopt;
  }
}

void TableCache::store(const CacheKey& key, const GammaTable& table) const {
  fs::create_directories(dir_);
  const fs::path final_path = path_for(key);
  fs::path temp = final_path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::trunc);
    if (!out) throw Error("cannot write cache entry " + temp.string());
    out << to_json(table) << '\n';
  }
  fs::rename(temp, final_path);
}

}  // namespace trunc_hermite::cli
