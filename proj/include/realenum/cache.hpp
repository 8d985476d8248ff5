#ifndef REALENUM_CACHE_HPP
#define REALENUM_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace realenum {

// Bumped whenever a multiplicity convention changes; stale records must
// never be read back as current ones.
constexpr int kConventionVersion = 1;

std::string sha256_hex(const std::string& data);

// Content-addressed result store: one file per record, written atomically
// (temp file + rename).  The directory defaults to .realenum-cache and can
// be overridden by --cache-dir or the REAL_ENUM_CACHE environment variable.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  static std::filesystem::path resolve_dir(const std::string& cli_override);

  static std::string compute_key(const std::string& surface, const std::string& cls,
                                 const std::string& operation);

  std::optional<std::string> load(const std::string& key) const;
  void store(const std::string& key, const std::string& payload) const;

  std::vector<std::string> list() const;
  std::size_t clear() const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

}  // namespace realenum

#endif  // REALENUM_CACHE_HPP
