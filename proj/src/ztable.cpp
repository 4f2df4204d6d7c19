#include "cubeturan/ztable.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "cubeturan/counting.hpp"
#include "cubeturan/error.hpp"

namespace cubeturan {

std::optional<BigInt> ZTable::get(int k, int l) const {
  auto it = values_.find({k, l});
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void ZTable::set(int k, int l, BigInt value) { values_[{k, l}] = std::move(value); }

void ZTable::ensure(int k, int l, unsigned threads) {
  if (!contains(k, l)) set(k, l, z_kl(k, l, threads));
}

void ZTable::ensure_for_cycle_count(int n, int l, unsigned threads) {
  for (int k = min_cycle_dimension(l); k <= std::min(l, n); ++k) ensure(k, l, threads);
}

bool ZTable::load_cache(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return false;
  std::string line;
  if (!std::getline(in, line) || line != std::string("# cubeturan ") + kToolVersion) return false;
  std::map<std::pair<int, int>, BigInt> loaded;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string tag, value;
    int k = 0, l = 0;
    if (!(fields >> tag >> k >> l >> value) || tag != "z" ||
        value.find_first_not_of("0123456789") != std::string::npos) {
      return false;
    }
    loaded[{k, l}] = BigInt(value);
  }
  for (auto& [key, v] : loaded) values_[key] = std::move(v);
  return true;
}

void ZTable::save_cache(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write z-table cache " + path.string());
  out << "# cubeturan " << kToolVersion << '\n';
  for (const auto& [key, v] : values_) out << "z " << key.first << ' ' << key.second << ' ' << v.str() << '\n';
}

}  // namespace cubeturan
