#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <utility>

#include "cubeturan/numeric.hpp"

namespace cubeturan {

inline constexpr const char* kToolVersion = "1.0.0";

// Memo of z_{k,l}: the number of 2l-cycles in Q_k whose star lists use all k
// positions.
class ZTable {
 public:
  std::optional<BigInt> get(int k, int l) const;
  void set(int k, int l, BigInt value);
  bool contains(int k, int l) const { return values_.count({k, l}) != 0; }
  std::size_t size() const { return values_.size(); }

  // Fills every entry closed_count_c2l(n, l, *this) needs, enumerating the
  // missing ones with z_kl.
  void ensure_for_cycle_count(int n, int l, unsigned threads = 1);
  void ensure(int k, int l, unsigned threads = 1);

  // Cache file: a "# cubeturan <version>" line, then "z <k> <l> <value>"
  // lines. Caches written by another version are ignored.
  bool load_cache(const std::filesystem::path& path);
  void save_cache(const std::filesystem::path& path) const;

  const std::map<std::pair<int, int>, BigInt>& entries() const { return values_; }

 private:
  std::map<std::pair<int, int>, BigInt> values_;
};

}  // namespace cubeturan
