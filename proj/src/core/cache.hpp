#pragma once

#include <atomic>
#include <filesystem>
#include <string>

#include "characters.hpp"

namespace lierep {

// One directory per Cartan type, one file per highest weight. The first line
// of a file is "fnv1a64:<hex>" over the rest, which is the canonical
// character JSON. Files are written to a temporary name and renamed.
class DiskCharacterStore : public CharacterStore {
 public:
  explicit DiskCharacterStore(std::filesystem::path root);

  FormalCharacter lookup_or_compute(const RootSystemPtr& rs, const Weight& lambda,
                                    const std::function<FormalCharacter()>& compute) override;

  std::filesystem::path entry_path(const CartanSpec& spec, const Weight& lambda) const;
  const std::filesystem::path& root() const { return root_; }

  std::size_t hits() const { return hits_; }
  std::size_t writes() const { return writes_; }

 private:
  std::filesystem::path root_;
  std::atomic<bool> warned_{false};
  std::atomic<std::size_t> hits_{0}, writes_{0};
};

// $LIEREP_CACHE_DIR, else $XDG_DATA_HOME/lierep/cache, else ~/.local/share/lierep/cache.
std::filesystem::path default_cache_dir();

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace lierep
