#include "cache.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <unistd.h>

#include "serialize.hpp"

namespace lierep {

namespace fs = std::filesystem;

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

std::string checksum_line(const std::string& payload) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(fnv1a64(payload)));
  return buf;
}

std::optional<FormalCharacter> read_entry(const fs::path& p, const RootSystemPtr& rs) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::string header;
  if (!std::getline(in, header)) return std::nullopt;
  std::ostringstream rest;
  rest << in.rdbuf();
  const std::string payload = rest.str();
  if (header != checksum_line(payload)) return std::nullopt;
  try {
    FormalCharacter ch = character_from_json(Json::parse(payload));
    if (!(ch.rs().spec() == rs->spec()) || character_json(ch).dump() != payload) return std::nullopt;
    FormalCharacter out(rs);
    for (const auto& [w, m] : ch.support()) out.add(w, m);
    return out;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

DiskCharacterStore::DiskCharacterStore(fs::path root) : root_(std::move(root)) {}

fs::path DiskCharacterStore::entry_path(const CartanSpec& spec, const Weight& lambda) const {
  std::string name;
  for (std::size_t i = 0; i < lambda.size(); ++i) name += (i ? "," : "") + std::to_string(lambda[i]);
  return root_ / spec.str() / (name + ".json");
}

FormalCharacter DiskCharacterStore::lookup_or_compute(const RootSystemPtr& rs, const Weight& lambda,
                                                      const std::function<FormalCharacter()>& compute) {
  const fs::path p = entry_path(rs->spec(), lambda);
  if (auto hit = read_entry(p, rs)) {
    ++hits_;
    return std::move(*hit);
  }
  FormalCharacter ch = compute();
  const std::string payload = character_json(ch).dump();
  static std::atomic<unsigned> counter{0};
  const fs::path tmp = p.parent_path() / (p.filename().string() + ".tmp." + std::to_string(::getpid()) + "." +
                                          std::to_string(counter++));
  std::error_code ec;
  fs::create_directories(p.parent_path(), ec);
  bool ok = !ec;
  if (ok) {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << checksum_line(payload) << '\n' << payload;
    out.close();
    ok = static_cast<bool>(out);
    if (ok) fs::rename(tmp, p, ec);
    if (!ok || ec) {
      ok = false;
      fs::remove(tmp, ec);
    }
  }
  if (ok)
    ++writes_;
  else if (!warned_.exchange(true))
    std::cerr << "warning: cannot write character cache under " << root_.string() << "; continuing without it\n";
  return ch;
}

fs::path default_cache_dir() {
  if (const char* d = std::getenv("LIEREP_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_DATA_HOME"); x && *x) return fs::path(x) / "lierep" / "cache";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".local" / "share" / "lierep" / "cache";
  return fs::temp_directory_path() / "lierep-cache";
}

}  // namespace lierep
