#pragma once
/// @file cache.hpp
/// On-disk cache of reduced image bases of truncated quotients.
///
/// Each entry is `<key>.basis` (sparse text format) plus `<key>.meta`
/// holding the key, the artifact version and a checksum of the basis file.
/// Writes go to a temporary file first and are renamed into place.

#include <filesystem>
#include <optional>
#include <string>

#include "modrep/quotient.hpp"
#include "modrep/sparse.hpp"

namespace modrep {

class Cache {
 public:
  explicit Cache(std::filesystem::path dir);
  /// Directory from MODREP_CACHE_DIR, or none when unset or empty.
  static std::optional<Cache> from_env();

  const std::filesystem::path& dir() const { return dir_; }
  static std::string key(std::uint32_t p, unsigned k, int r, Field::code lambda, int depth, int slack);

  void store(const std::string& key, const SparseMat& m) const;
  /// None when absent; ChecksumError when the entry is corrupt or stale.
  std::optional<SparseMat> load(const std::string& key) const;
  void invalidate(const std::string& key) const;

 private:
  std::filesystem::path dir_;
};

/// FNV-1a 64-bit, hex encoded.
std::string checksum(const std::string& bytes);

/// Quotient context, loaded from the cache when possible. A corrupt entry
/// is recomputed and rewritten; `note` then says so.
QuotientCtx cached_quotient(const Cache* cache, WeightPtr w, Field::code lambda, int depth, int slack,
                            bool* hit = nullptr, std::string* note = nullptr);

}  // namespace modrep
