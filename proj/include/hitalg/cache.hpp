#pragma once

#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cohit.hpp"

namespace hitalg {

inline constexpr int kCacheSchemaVersion = 1;
inline constexpr const char* kCacheEnvVar = "HITALG_CACHE_DIR";

// What a cache entry preserves of a CohitBasis: enough to answer dimension
// and basis queries without re-echelonizing.
struct CohitSummary {
  int h = 0, n = 0;
  std::vector<Exps> admissibles;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> by_weight;

  int dim() const { return static_cast<int>(admissibles.size()); }

  bool operator==(const CohitSummary& o) const {
    return h == o.h && n == o.n && admissibles == o.admissibles && by_weight == o.by_weight;
  }
};

inline CohitSummary summarize(const CohitBasis& cb) {
  return CohitSummary{cb.h(), cb.n(), cb.admissibles(), cb.by_weight()};
}

namespace detail {

inline void put_i32(std::string& out, std::int32_t v) {
  for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((static_cast<std::uint32_t>(v) >> (8 * b)) & 0xff));
}

inline std::int32_t get_i32(const std::string& in, std::size_t& pos) {
  if (pos + 4 > in.size()) throw std::runtime_error("truncated cache payload");
  std::uint32_t v = 0;
  for (int b = 0; b < 4; ++b) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(in[pos++])) << (8 * b);
  return static_cast<std::int32_t>(v);
}

inline std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t x = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    x ^= c;
    x *= 1099511628211ull;
  }
  return x;
}

}  // namespace detail

inline std::string serialize(const CohitSummary& s) {
  using detail::put_i32;
  std::string out = "HITC";
  put_i32(out, kCacheSchemaVersion);
  put_i32(out, s.h);
  put_i32(out, s.n);
  put_i32(out, s.dim());
  for (const auto& m : s.admissibles)
    for (int a : m) put_i32(out, a);
  put_i32(out, static_cast<std::int32_t>(s.by_weight.size()));
  for (const auto& [w, members] : s.by_weight) {
    put_i32(out, static_cast<std::int32_t>(w.size()));
    for (int x : w) put_i32(out, x);
    put_i32(out, static_cast<std::int32_t>(members.size()));
    for (int x : members) put_i32(out, x);
  }
  return out;
}

inline CohitSummary deserialize(const std::string& bytes) {
  using detail::get_i32;
  if (bytes.size() < 8 || bytes.compare(0, 4, "HITC") != 0) throw std::runtime_error("bad cache payload magic");
  std::size_t pos = 4;
  if (get_i32(bytes, pos) != kCacheSchemaVersion) throw std::runtime_error("cache schema version mismatch");
  CohitSummary s;
  s.h = get_i32(bytes, pos);
  s.n = get_i32(bytes, pos);
  int dim = get_i32(bytes, pos);
  s.admissibles.resize(dim);
  for (auto& m : s.admissibles) {
    m.resize(s.h);
    for (int& a : m) a = get_i32(bytes, pos);
  }
  int groups = get_i32(bytes, pos);
  s.by_weight.resize(groups);
  for (auto& [w, members] : s.by_weight) {
    w.resize(get_i32(bytes, pos));
    for (int& x : w) x = get_i32(bytes, pos);
    members.resize(get_i32(bytes, pos));
    for (int& x : members) x = get_i32(bytes, pos);
  }
  return s;
}

// Directory of cached hit space summaries.  Each entry is a binary payload
// plus a JSON sidecar holding the key, the checksum, and quick-look fields.
// Writes go to a temp file first and are renamed into place; stale or
// corrupt entries are ignored rather than trusted.
class Cache {
 public:
  explicit Cache(std::string dir) : dir_(std::move(dir)) {}

  // CLI flag wins, then the environment, then disabled.
  static Cache from_flag(const std::string& flag) {
    if (!flag.empty()) return Cache(flag);
    const char* env = std::getenv(kCacheEnvVar);
    return Cache(env ? env : "");
  }

  bool enabled() const { return !dir_.empty(); }
  const std::string& dir() const { return dir_; }

  std::optional<CohitSummary> load(int h, int n) const {
    if (!enabled()) return std::nullopt;
    std::ifstream side(sidecar_path(h, n));
    if (!side) return std::nullopt;
    try {
      nlohmann::json meta = nlohmann::json::parse(side);
      if (meta.at("schema").get<int>() != kCacheSchemaVersion) return std::nullopt;
      std::ifstream pay(payload_path(h, n), std::ios::binary);
      if (!pay) return std::nullopt;
      std::string bytes((std::istreambuf_iterator<char>(pay)), std::istreambuf_iterator<char>());
      char hex[17];
      std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(detail::fnv1a(bytes)));
      if (meta.at("checksum").get<std::string>() != hex) return std::nullopt;
      CohitSummary s = deserialize(bytes);
      if (s.h != h || s.n != n) return std::nullopt;
      return s;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  void store(const CohitSummary& s) const {
    if (!enabled()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);  // best effort, write reports failure
    std::string bytes = serialize(s);
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(detail::fnv1a(bytes)));
    nlohmann::json meta{{"h", s.h},
                        {"n", s.n},
                        {"schema", kCacheSchemaVersion},
                        {"dim", s.dim()},
                        {"payload", basename(s.h, s.n) + ".bin"},
                        {"checksum", hex}};
    atomic_write(payload_path(s.h, s.n), bytes);
    atomic_write(sidecar_path(s.h, s.n), meta.dump(2) + "\n");
  }

 private:
  std::string basename(int h, int n) const {
    return "cohit-h" + std::to_string(h) + "-n" + std::to_string(n) + "-v" + std::to_string(kCacheSchemaVersion);
  }
  std::string payload_path(int h, int n) const { return dir_ + "/" + basename(h, n) + ".bin"; }
  std::string sidecar_path(int h, int n) const { return dir_ + "/" + basename(h, n) + ".json"; }

  void atomic_write(const std::string& path, const std::string& bytes) const {
    std::string tmp = path + ".tmp." + std::to_string(static_cast<unsigned>(::getpid()));
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot write " + tmp);
      out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
      if (!out) throw std::runtime_error("short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
      std::remove(tmp.c_str());
      throw std::runtime_error("cannot rename into " + path);
    }
  }

  std::string dir_;
};

}  // namespace hitalg
