#include "modrep/cache.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "modrep/errors.hpp"
#include "modrep/report.hpp"

namespace modrep {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_atomic(const fs::path& path, const std::string& bytes) {
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    out << bytes;
  }
  fs::rename(tmp, path);
}

}  // namespace

std::string checksum(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

Cache::Cache(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

std::optional<Cache> Cache::from_env() {
  const char* d = std::getenv("MODREP_CACHE_DIR");
  if (!d || !*d) return std::nullopt;
  return Cache(d);
}

std::string Cache::key(std::uint32_t p, unsigned k, int r, Field::code lambda, int depth, int slack) {
  std::ostringstream os;
  os << "quot-p" << p << "-k" << k << "-r" << r << "-l" << lambda << "-n" << depth << "-R" << slack << "-v"
     << artifact_version();
  return os.str();
}

void Cache::store(const std::string& key, const SparseMat& m) const {
  std::string body = m.to_text();
  write_atomic(dir_ / (key + ".basis"), body);
  std::ostringstream meta;
  meta << "key " << key << "\nversion " << artifact_version() << "\nchecksum " << checksum(body) << "\n";
  write_atomic(dir_ / (key + ".meta"), meta.str());
}

std::optional<SparseMat> Cache::load(const std::string& key) const {
  fs::path basis = dir_ / (key + ".basis"), meta = dir_ / (key + ".meta");
  if (!fs::exists(basis) || !fs::exists(meta)) return std::nullopt;
  std::istringstream ms(read_file(meta));
  std::string t1, k, t2, v, t3, sum;
  if (!(ms >> t1 >> k >> t2 >> v >> t3 >> sum) || t1 != "key" || t2 != "version" || t3 != "checksum")
    throw ChecksumError("cache metadata unreadable for " + key);
  if (k != key || v != artifact_version()) throw ChecksumError("cache metadata does not match " + key);
  std::string body = read_file(basis);
  if (checksum(body) != sum) throw ChecksumError("cache checksum mismatch for " + key);
  try {
    return SparseMat::from_text(body);
  } catch (const Error& e) {
    throw ChecksumError("cache body unreadable for " + key + ": " + e.what());
  }
}

void Cache::invalidate(const std::string& key) const {
  fs::remove(dir_ / (key + ".basis"));
  fs::remove(dir_ / (key + ".meta"));
}

QuotientCtx cached_quotient(const Cache* cache, WeightPtr w, Field::code lambda, int depth, int slack,
                            bool* hit, std::string* note) {
  if (hit) *hit = false;
  if (!cache) return QuotientCtx(w, lambda, depth, slack);
  const Field& f = w->field();
  std::string key = Cache::key(f.p(), f.k(), w->r(), lambda, depth, slack);
  try {
    if (auto m = cache->load(key)) {
      BallCoords bc(w, depth);
      if (m->cols == bc.dim() && m->field == &f) {
        if (hit) *hit = true;
        return QuotientCtx(w, lambda, depth, slack, m->row_vecs);
      }
      if (note) *note = "cache entry had the wrong shape; recomputed";
    }
  } catch (const ChecksumError& e) {
    if (note) *note = std::string(e.what()) + "; recomputed";
  }
  QuotientCtx ctx(w, lambda, depth, slack);
  SparseMat m(f, ctx.image_basis().size(), ctx.dim_w());
  for (std::size_t i = 0; i < ctx.image_basis().size(); ++i) m.set_row(i, ctx.image_basis()[i]);
  cache->store(key, m);
  return ctx;
}

}  // namespace modrep
